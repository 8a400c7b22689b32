//! JSON group configuration, schema `qdim/1`.
//!
//! ```json
//! {"schema": "qdim/1", "kind": "ao", "params": {"n": 3}, "precision": 60}
//! ```

use std::path::Path;

use qdim_core::analysis::build_counterexample;
use qdim_core::fusion::{FusionRing, GroupKind, Guards};
use qdim_core::numerics::{Complex, ComplexMatrix};
use qdim_core::spectra::RhoSpectrum;
use qdim_core::{Precision, Scalar};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::error::CliError;

pub const SCHEMA: &str = "qdim/1";
pub const MIN_PRECISION: usize = 30;

/// A number given either as a JSON number or as a decimal / `p/q` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Num {
    Text(String),
    Number(serde_json::Number),
}

impl Num {
    fn scalar(&self) -> Result<Scalar, CliError> {
        let text = match self {
            Num::Text(s) => s.clone(),
            Num::Number(n) => n.to_string(),
        };
        Scalar::parse(&text).map_err(|e| CliError::Config(format!("bad number {text:?}: {e}")))
    }
}

type RawMatrix = Vec<Vec<[Num; 2]>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    schema: String,
    kind: String,
    #[serde(default)]
    params: Map<String, Value>,
    precision: Option<usize>,
    #[serde(default)]
    guards: RawGuards,
    normalize: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGuards {
    max_total_dim: Option<u128>,
    max_labels: Option<usize>,
    max_spectrum_len: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AoParams {
    n: Option<usize>,
    q: Option<Num>,
    #[serde(rename = "F")]
    f: Option<RawMatrix>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AuParams {
    #[serde(rename = "F")]
    f: Option<RawMatrix>,
    diag: Option<Vec<Num>>,
    counterexample_y: Option<Num>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupParams {
    free_abelian: Option<usize>,
    free: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `A_o(n)` with `F = 1`.
    AoKac { n: usize },
    /// `SU_q(2)`.
    SuQ2 { q: Scalar },
    AoMatrix { f: ComplexMatrix },
    AuMatrix { f: ComplexMatrix },
    AuCounterexample { y: Scalar },
    GroupDual(GroupKind),
}

#[derive(Clone, Debug)]
pub struct GroupConfig {
    pub kind: String,
    pub spec: GroupSpec,
    /// Parameters as written, echoed in reports.
    pub params: Value,
    pub precision: Option<usize>,
    pub guards: Guards,
    pub normalize: bool,
}

fn typed<T: DeserializeOwned>(kind: &str, params: &Map<String, Value>) -> Result<T, CliError> {
    serde_json::from_value(Value::Object(params.clone()))
        .map_err(|e| CliError::Config(format!("params for kind \"{kind}\": {e}")))
}

fn exactly_one(kind: &str, given: &[(&str, bool)]) -> Result<usize, CliError> {
    let present: Vec<usize> = (0..given.len()).filter(|&i| given[i].1).collect();
    match present.as_slice() {
        [i] => Ok(*i),
        _ => {
            let names: Vec<&str> = given.iter().map(|g| g.0).collect();
            Err(CliError::Config(format!(
                "kind \"{kind}\" needs exactly one of {} in params",
                names.join(", ")
            )))
        }
    }
}

fn matrix(raw: &RawMatrix) -> Result<ComplexMatrix, CliError> {
    let rows = raw
        .iter()
        .map(|row| row.iter().map(|[re, im]| Ok(Complex::new(re.scalar()?, im.scalar()?))).collect())
        .collect::<Result<Vec<Vec<Complex>>, CliError>>()?;
    Ok(ComplexMatrix::from_rows(rows)?)
}

impl GroupConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let raw: RawConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        if raw.schema != SCHEMA {
            return Err(CliError::Config(format!("schema must be \"{SCHEMA}\", got \"{}\"", raw.schema)));
        }
        if let Some(p) = raw.precision {
            check_precision(p)?;
        }
        let spec = match raw.kind.as_str() {
            "ao" => {
                let p: AoParams = typed("ao", &raw.params)?;
                match exactly_one("ao", &[("n", p.n.is_some()), ("q", p.q.is_some()), ("F", p.f.is_some())])? {
                    0 => {
                        let n = p.n.expect("checked");
                        if n < 2 {
                            return Err(CliError::Config(format!("ao needs n >= 2, got {n}")));
                        }
                        GroupSpec::AoKac { n }
                    }
                    1 => GroupSpec::SuQ2 { q: p.q.expect("checked").scalar()? },
                    _ => GroupSpec::AoMatrix { f: matrix(p.f.as_ref().expect("checked"))? },
                }
            }
            "au" => {
                let p: AuParams = typed("au", &raw.params)?;
                let which = exactly_one(
                    "au",
                    &[("F", p.f.is_some()), ("diag", p.diag.is_some()), ("counterexample_y", p.counterexample_y.is_some())],
                )?;
                match which {
                    0 => GroupSpec::AuMatrix { f: matrix(p.f.as_ref().expect("checked"))? },
                    1 => {
                        let diag = p.diag.expect("checked").iter().map(Num::scalar).collect::<Result<_, _>>()?;
                        GroupSpec::AuMatrix { f: ComplexMatrix::diagonal(diag)? }
                    }
                    _ => GroupSpec::AuCounterexample { y: p.counterexample_y.expect("checked").scalar()? },
                }
            }
            "group_dual" => {
                let p: GroupParams = typed("group_dual", &raw.params)?;
                let which = exactly_one("group_dual", &[("free_abelian", p.free_abelian.is_some()), ("free", p.free.is_some())])?;
                GroupSpec::GroupDual(if which == 0 {
                    GroupKind::FreeAbelian { rank: p.free_abelian.expect("checked") }
                } else {
                    GroupKind::Free { rank: p.free.expect("checked") }
                })
            }
            other => {
                return Err(CliError::Config(format!(
                    "unknown kind \"{other}\"; expected one of ao, au, group_dual"
                )))
            }
        };
        let defaults = Guards::default();
        let guards = Guards {
            max_total_dim: raw.guards.max_total_dim.unwrap_or(defaults.max_total_dim),
            max_labels: raw.guards.max_labels.unwrap_or(defaults.max_labels),
            max_spectrum_len: raw.guards.max_spectrum_len.unwrap_or(defaults.max_spectrum_len),
        };
        Ok(GroupConfig {
            kind: raw.kind,
            spec,
            params: Value::Object(raw.params),
            precision: raw.precision,
            guards,
            normalize: raw.normalize.unwrap_or(true),
        })
    }

    pub fn build_ring(&self, prec: Precision) -> Result<FusionRing, CliError> {
        let ring = match &self.spec {
            GroupSpec::AoKac { n } => FusionRing::ao_kac(*n, prec)?,
            GroupSpec::SuQ2 { q } => FusionRing::su_q2(q, prec)?,
            GroupSpec::AoMatrix { f } => FusionRing::ao_from_f(f, self.normalize, prec)?,
            GroupSpec::AuMatrix { f } => FusionRing::au_from_f(f, self.normalize, prec)?,
            GroupSpec::AuCounterexample { y } => {
                let spectrum: RhoSpectrum = build_counterexample(y, prec)?.spectrum;
                FusionRing::free_unitary(spectrum, prec)?
            }
            GroupSpec::GroupDual(kind) => FusionRing::group_dual(*kind, prec)?,
        };
        Ok(ring.with_guards(self.guards))
    }
}

pub fn check_precision(p: usize) -> Result<(), CliError> {
    if p < MIN_PRECISION {
        Err(CliError::Config(format!("precision must be at least {MIN_PRECISION} digits, got {p}")))
    } else {
        Ok(())
    }
}

/// Precedence: flag, then `QDIM_PRECISION`, then the config file, then the default.
pub fn resolve_precision(
    flag: Option<usize>,
    env: Option<&str>,
    config: Option<usize>,
) -> Result<Precision, CliError> {
    let env = match env {
        Some(text) => Some(
            text.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("QDIM_PRECISION must be an integer, got {text:?}")))?,
        ),
        None => None,
    };
    let digits = flag.or(env).or(config).unwrap_or(Precision::DEFAULT_DIGITS);
    check_precision(digits)?;
    Ok(Precision::new(digits)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds() {
        let c = GroupConfig::from_json(r#"{"schema":"qdim/1","kind":"ao","params":{"n":3}}"#).unwrap();
        assert_eq!(c.spec, GroupSpec::AoKac { n: 3 });
        let c = GroupConfig::from_json(r#"{"schema":"qdim/1","kind":"ao","params":{"q":"1/2"}}"#).unwrap();
        assert_eq!(c.spec, GroupSpec::SuQ2 { q: Scalar::ratio(1, 2) });
        let c = GroupConfig::from_json(r#"{"schema":"qdim/1","kind":"au","params":{"diag":[2, "0.5", 1]}}"#).unwrap();
        assert!(matches!(c.spec, GroupSpec::AuMatrix { .. }));
        let c = GroupConfig::from_json(r#"{"schema":"qdim/1","kind":"group_dual","params":{"free":2}}"#).unwrap();
        assert_eq!(c.spec, GroupSpec::GroupDual(GroupKind::Free { rank: 2 }));
        let c = GroupConfig::from_json(
            r#"{"schema":"qdim/1","kind":"au","params":{"F":[[[0,0],[1,0]],[[-2,0],[0,0]]]},"guards":{"max_labels":10}}"#,
        )
        .unwrap();
        assert_eq!(c.guards.max_labels, 10);
        assert!(c.build_ring(Precision::default()).is_ok());
    }

    #[test]
    fn fail_closed() {
        for bad in [
            r#"{"schema":"qdim/2","kind":"ao","params":{"n":3}}"#,
            r#"{"schema":"qdim/1","kind":"ao","params":{"n":3},"extra":1}"#,
            r#"{"schema":"qdim/1","kind":"ao","params":{"n":3,"m":1}}"#,
            r#"{"schema":"qdim/1","kind":"ao","params":{"n":3,"q":2}}"#,
            r#"{"schema":"qdim/1","kind":"ao","params":{}}"#,
            r#"{"schema":"qdim/1","kind":"so","params":{"n":3}}"#,
            r#"{"schema":"qdim/1","kind":"ao","params":{"n":3},"precision":20}"#,
            r#"{"schema":"qdim/1","kind":"ao","params":{"n":3},"guards":{"max_dim":5}}"#,
        ] {
            assert!(GroupConfig::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn singular_f_is_rejected() {
        let c = GroupConfig::from_json(r#"{"schema":"qdim/1","kind":"au","params":{"diag":[1, 0]}}"#).unwrap();
        assert!(c.build_ring(Precision::default()).is_err());
    }

    #[test]
    fn precision_precedence() {
        assert_eq!(resolve_precision(Some(40), Some("50"), Some(70)).unwrap().digits(), 40);
        assert_eq!(resolve_precision(None, Some("50"), Some(70)).unwrap().digits(), 50);
        assert_eq!(resolve_precision(None, None, Some(70)).unwrap().digits(), 70);
        assert_eq!(resolve_precision(None, None, None).unwrap().digits(), 60);
        assert!(resolve_precision(Some(10), None, None).is_err());
        assert!(resolve_precision(None, Some("abc"), None).is_err());
    }
}
