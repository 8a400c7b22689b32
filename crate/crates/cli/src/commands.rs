use qdim_core::analysis::{
    build_counterexample, default_n_max, default_probes, estimate_rate, growth_table, theorem_audit, RateBand,
};
use qdim_core::fusion::FusionRing;
use qdim_core::spectra::{Mismatch, RhoSpectrum};
use qdim_core::{Precision, Scalar};
use serde_json::{json, Value};

use crate::config::{resolve_precision, GroupConfig};
use crate::error::CliError;
use crate::expr::{parse_rep, RepExpr};
use crate::output::{Outcome, Report, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Dt { t: Vec<Scalar> },
    Symmetry,
    Decompose { power: u32 },
    Growth { max_n: Option<usize> },
    Audit { max_n: Option<usize>, t: Option<Vec<Scalar>> },
    Counterexample { y: Scalar },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Dt { .. } => "dt",
            Command::Symmetry => "symmetry",
            Command::Decompose { .. } => "decompose",
            Command::Growth { .. } => "growth",
            Command::Audit { .. } => "audit",
            Command::Counterexample { .. } => "counterexample",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Request {
    pub command: Command,
    pub config: Option<GroupConfig>,
    pub expr: Option<String>,
    pub precision: Option<usize>,
    /// Raw value of `QDIM_PRECISION`, if set.
    pub env_precision: Option<String>,
}

/// Comma-separated exponents, e.g. `-3,1.5,2`.
pub fn parse_exponents(text: &str) -> Result<Vec<Scalar>, CliError> {
    text.split(',')
        .map(|part| {
            Scalar::parse(part.trim()).map_err(|_| CliError::Usage(format!("bad exponent {:?} in --t", part.trim())))
        })
        .collect()
}

struct Fmt(Precision);

impl Fmt {
    fn num(&self, s: &Scalar) -> String {
        s.to_decimal_string(self.0.digits())
    }

    fn list(&self, values: &[Scalar]) -> Value {
        Value::Array(values.iter().map(|v| Value::String(self.num(v))).collect())
    }

    fn witness(&self, w: &Option<Mismatch>) -> Value {
        match w {
            Some(m) => json!({
                "index": m.index,
                "eigenvalue": self.num(&m.eigenvalue),
                "inverse_eigenvalue": self.num(&m.inverse_eigenvalue),
            }),
            None => Value::Null,
        }
    }

    fn witness_text(&self, w: &Option<Mismatch>) -> String {
        match w {
            Some(m) => format!("index {}: {} vs {}", m.index, self.num(&m.eigenvalue), self.num(&m.inverse_eigenvalue)),
            None => "none".into(),
        }
    }
}

pub fn execute(req: &Request) -> Result<Report, CliError> {
    let prec = resolve_precision(
        req.precision,
        req.env_precision.as_deref(),
        req.config.as_ref().and_then(|c| c.precision),
    )?;
    let f = Fmt(prec);

    if let Command::Counterexample { y } = &req.command {
        let outcome = counterexample(y, &f)?;
        let group = match &req.config {
            Some(cfg) => group_value(cfg),
            None => json!({"kind": "au", "params": {"counterexample_y": f.num(y)}}),
        };
        return Ok(Report::new(group, None, req.command.name(), outcome, prec));
    }

    let cfg = req
        .config
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{} needs --config", req.command.name())))?;
    let ring = cfg.build_ring(prec)?;
    let expr = parse_rep(req.expr.as_deref().unwrap_or("fund"), ring.catalog())?;
    let canonical = expr.to_string();
    let outcome = match &req.command {
        Command::Spectrum => spectrum(&ring, &expr, &f)?,
        Command::Dt { t } => dt(&ring, &expr, t, &f)?,
        Command::Symmetry => symmetry(&ring, &expr, &f)?,
        Command::Decompose { power } => decompose(&ring, &expr, *power)?,
        Command::Growth { max_n } => growth(&ring, &expr, max_n.unwrap_or(default_n_max(ring.catalog())), &f)?,
        Command::Audit { max_n, t } => {
            let probes = t.clone().unwrap_or_else(default_probes);
            audit(&ring, &expr, max_n.unwrap_or(default_n_max(ring.catalog())), &probes, &f)?
        }
        Command::Counterexample { .. } => unreachable!("handled above"),
    };
    Ok(Report::new(group_value(cfg), Some(canonical), req.command.name(), outcome, prec))
}

fn group_value(cfg: &GroupConfig) -> Value {
    json!({"kind": cfg.kind, "params": cfg.params})
}

fn spectrum_of(ring: &FusionRing, expr: &RepExpr) -> Result<RhoSpectrum, CliError> {
    Ok(ring.spectrum_of(&expr.evaluate(ring)?)?)
}

fn spectrum(ring: &FusionRing, expr: &RepExpr, f: &Fmt) -> Result<Outcome, CliError> {
    let s = spectrum_of(ring, expr)?;
    let result = json!({
        "dim": s.dim(),
        "normalized": s.is_normalized(),
        "trace": f.num(&s.trace()),
        "inverse_trace": f.num(&s.inverse_trace()),
        "eigenvalues": f.list(s.eigenvalues()),
    });
    let table = Table::new(
        &["index", "eigenvalue"],
        s.eigenvalues().iter().enumerate().map(|(i, l)| vec![i.to_string(), f.num(l)]).collect(),
    );
    Ok(Outcome {
        result,
        summary: vec![
            ("dim".into(), s.dim().to_string()),
            ("normalized".into(), s.is_normalized().to_string()),
            ("trace".into(), f.num(&s.trace())),
            ("inverse trace".into(), f.num(&s.inverse_trace())),
        ],
        table: Some(table),
    })
}

fn dt(ring: &FusionRing, expr: &RepExpr, t: &[Scalar], f: &Fmt) -> Result<Outcome, CliError> {
    let s = spectrum_of(ring, expr)?;
    let profile = s.profile(t, f.0);
    let rows: Vec<Vec<String>> = profile
        .rows
        .iter()
        .map(|r| vec![f.num(&r.t), f.num(&r.d_t), f.num(&r.d_minus_t), f.num(&r.ratio())])
        .collect();
    let result = json!({
        "dim": s.dim(),
        "rows": profile.rows.iter().map(|r| json!({
            "t": f.num(&r.t),
            "d_t": f.num(&r.d_t),
            "d_minus_t": f.num(&r.d_minus_t),
            "ratio": f.num(&r.ratio()),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        result,
        summary: vec![("dim".into(), s.dim().to_string())],
        table: Some(Table::new(&["t", "d_t", "d_-t", "ratio"], rows)),
    })
}

fn symmetry(ring: &FusionRing, expr: &RepExpr, f: &Fmt) -> Result<Outcome, CliError> {
    let s = spectrum_of(ring, expr)?;
    let verdict = s.is_symmetric(f.0);
    let newton = s.is_symmetric_by_power_sums(f.0);
    let result = json!({
        "dim": s.dim(),
        "symmetric": verdict.symmetric,
        "witness": f.witness(&verdict.witness),
        "newton_symmetric": newton,
        "routes_agree": newton == verdict.symmetric,
    });
    Ok(Outcome {
        result,
        summary: vec![
            ("dim".into(), s.dim().to_string()),
            ("symmetric".into(), verdict.symmetric.to_string()),
            ("witness".into(), f.witness_text(&verdict.witness)),
            ("newton symmetric".into(), newton.to_string()),
            ("routes agree".into(), (newton == verdict.symmetric).to_string()),
        ],
        table: None,
    })
}

fn decompose(ring: &FusionRing, expr: &RepExpr, power: u32) -> Result<Outcome, CliError> {
    let base = expr.evaluate(ring)?;
    let d = ring.decompose_power(&base, power as usize)?;
    let total = ring.total_dimension(&d)?;
    let mut rows = Vec::with_capacity(d.len());
    let mut terms = Vec::with_capacity(d.len());
    for (label, &mult) in &d {
        let dim = ring.dimension(label)?;
        rows.push(vec![label.to_string(), mult.to_string(), dim.to_string()]);
        terms.push(json!({"label": label.to_string(), "multiplicity": mult.to_string(), "dimension": dim.to_string()}));
    }
    Ok(Outcome {
        result: json!({"power": power, "total_dimension": total.to_string(), "terms": terms}),
        summary: vec![
            ("power".into(), power.to_string()),
            ("total dimension".into(), total.to_string()),
            ("distinct irreducibles".into(), d.len().to_string()),
        ],
        table: Some(Table::new(&["label", "multiplicity", "dimension"], rows)),
    })
}

fn growth(ring: &FusionRing, expr: &RepExpr, max_n: usize, f: &Fmt) -> Result<Outcome, CliError> {
    let u = expr.evaluate(ring)?;
    let table = growth_table(ring, &u, max_n)?;
    let rate = estimate_rate(&table, &RateBand::default(), f.0)?;
    let opt = |s: Option<Scalar>| s.map(|v| f.num(&v)).unwrap_or_default();
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.p.to_string(),
                r.b.to_string(),
                opt(table.b_root(r.n, f.0)),
                opt(table.step_base(r.n, f.0)),
            ]
        })
        .collect();
    let result = json!({
        "rows": table.rows.iter().map(|r| json!({
            "n": r.n,
            "p": r.p.to_string(),
            "b": r.b.to_string(),
            "b_root": table.b_root(r.n, f.0).map(|v| f.num(&v)),
            "step_base": table.step_base(r.n, f.0).map(|v| f.num(&v)),
        })).collect::<Vec<_>>(),
        "rate": {
            "n_max": rate.n_max,
            "b_root": f.num(&rate.root),
            "log_slope": f.num(&rate.log_slope),
            "base": f.num(&rate.base),
            "window": rate.window.iter().map(|(n, v)| json!({"n": n, "step_base": f.num(v)})).collect::<Vec<_>>(),
            "classification": rate.class.to_string(),
            "note": HEURISTIC_NOTE,
        },
    });
    Ok(Outcome {
        result,
        summary: vec![
            ("classification".into(), rate.class.to_string()),
            ("base estimate".into(), f.num(&rate.base)),
            ("b(U,N)^(1/N)".into(), f.num(&rate.root)),
            ("slope of ln b".into(), f.num(&rate.log_slope)),
            ("note".into(), HEURISTIC_NOTE.into()),
        ],
        table: Some(Table::new(&["n", "P_U(n)", "b(U,n)", "b^(1/n)", "sqrt(b(n)/b(n-1))"], rows)),
    })
}

const HEURISTIC_NOTE: &str = "finite-sample heuristic over n <= N; not a statement about the limit";

fn audit(ring: &FusionRing, expr: &RepExpr, max_n: usize, probes: &[Scalar], f: &Fmt) -> Result<Outcome, CliError> {
    let u = expr.evaluate(ring)?;
    let audit = theorem_audit(ring, &u, max_n, probes)?;
    let rows: Vec<Vec<String>> = audit
        .rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                f.num(&r.t),
                r.p.to_string(),
                f.num(&r.forward_lhs),
                f.num(&r.forward_rhs),
                f.num(&r.backward_lhs),
                f.num(&r.backward_rhs),
            ]
        })
        .collect();
    let mut summary = vec![
        ("symmetric".into(), audit.symmetry.symmetric.to_string()),
        ("witness".into(), f.witness_text(&audit.symmetry.witness)),
        ("newton symmetric".into(), audit.newton_symmetric.to_string()),
        ("inequality rows".into(), format!("{} (all hold)", audit.rows.len())),
    ];
    for c in &audit.contrapositive {
        summary.push((
            format!("c at t={}", f.num(&c.t)),
            format!("{} (P_U(n) >= c^n confirmed for n <= {})", f.num(&c.c), c.confirmed_through()),
        ));
    }
    let result = json!({
        "n_max": audit.n_max,
        "symmetric": audit.symmetry.symmetric,
        "witness": f.witness(&audit.symmetry.witness),
        "newton_symmetric": audit.newton_symmetric,
        "probes": audit.probes.iter().map(|p| json!({
            "t": f.num(&p.t),
            "d_t": f.num(&p.d_t),
            "d_minus_t": f.num(&p.d_minus_t),
            "asymmetric": p.asymmetric,
        })).collect::<Vec<_>>(),
        "rows": audit.rows.iter().map(|r| json!({
            "n": r.n,
            "t": f.num(&r.t),
            "p": r.p.to_string(),
            "forward_lhs": f.num(&r.forward_lhs),
            "forward_rhs": f.num(&r.forward_rhs),
            "forward_margin": f.num(&r.forward_margin()),
            "backward_lhs": f.num(&r.backward_lhs),
            "backward_rhs": f.num(&r.backward_rhs),
            "backward_margin": f.num(&r.backward_margin()),
        })).collect::<Vec<_>>(),
        "contrapositive": audit.contrapositive.iter().map(|c| json!({
            "t": f.num(&c.t),
            "c": f.num(&c.c),
            "confirmed_through": c.confirmed_through(),
            "rows": c.rows.iter().map(|r| json!({
                "n": r.n,
                "p": r.p.to_string(),
                "c_pow": f.num(&r.c_pow),
                "margin": f.num(&r.margin),
                "holds": r.holds,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        result,
        summary,
        table: Some(Table::new(
            &["n", "t", "P_U(n)", "d_t^n", "P^(t-1) d_-t^n", "d_-t^n", "P^(t-1) d_t^n"],
            rows,
        )),
    })
}

fn counterexample(y: &Scalar, f: &Fmt) -> Result<Outcome, CliError> {
    let ce = build_counterexample(y, f.0)?;
    let result = json!({
        "y": f.num(&ce.y),
        "x": f.num(&ce.x),
        "x_squared": f.num(&ce.x_squared),
        "F_diagonal": f.list(&[ce.y.clone(), ce.x.clone(), ce.x.clone()]),
        "spectrum": f.list(ce.spectrum.eigenvalues()),
        "trace": f.num(&ce.trace),
        "inverse_trace": f.num(&ce.inverse_trace),
        "trace_gap": f.num(&ce.trace_gap()),
        "quadratic_residual": f.num(&ce.quadratic_residual),
        "symmetric": ce.symmetry.symmetric,
        "witness": f.witness(&ce.symmetry.witness),
    });
    let table = Table::new(
        &["index", "eigenvalue", "inverse"],
        ce.spectrum
            .eigenvalues()
            .iter()
            .zip(ce.spectrum.inverse().eigenvalues())
            .enumerate()
            .map(|(i, (l, m))| vec![i.to_string(), f.num(l), f.num(m)])
            .collect(),
    );
    Ok(Outcome {
        result,
        summary: vec![
            ("y".into(), f.num(&ce.y)),
            ("x^2".into(), f.num(&ce.x_squared)),
            ("Tr(rho)".into(), f.num(&ce.trace)),
            ("Tr(rho^-1)".into(), f.num(&ce.inverse_trace)),
            ("|difference|".into(), f.num(&ce.trace_gap())),
            ("symmetric".into(), ce.symmetry.symmetric.to_string()),
            ("witness".into(), f.witness_text(&ce.symmetry.witness)),
        ],
        table: Some(table),
    })
}
