use super::growth::growth_table;
use crate::error::{Error, Result};
use crate::fusion::{Catalog, Decomposition, FusionRing};
use crate::numerics::{Precision, Scalar};
use crate::spectra::{RhoSpectrum, SymmetryVerdict};

/// `{1.5, 2, 3}`.
pub fn default_probes() -> Vec<Scalar> {
    vec![Scalar::ratio(3, 2), Scalar::from_int(2), Scalar::from_int(3)]
}

pub fn default_n_max(catalog: Catalog) -> usize {
    match catalog {
        Catalog::TemperleyLieb { .. } => 8,
        Catalog::FreeUnitary { .. } => 6,
        Catalog::GroupDual(_) => 12,
    }
}

/// One `(n, t)` evaluation of
/// `d_t^n <= P^{t-1} d_{-t}^n` (forward) and `d_{-t}^n <= P^{t-1} d_t^n` (backward).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityRow {
    pub n: usize,
    pub t: Scalar,
    pub p: u128,
    pub forward_lhs: Scalar,
    pub forward_rhs: Scalar,
    pub backward_lhs: Scalar,
    pub backward_rhs: Scalar,
}

impl InequalityRow {
    /// `rhs / lhs`; at least 1 up to rounding.
    pub fn forward_margin(&self) -> Scalar {
        &self.forward_rhs / &self.forward_lhs
    }

    pub fn backward_margin(&self) -> Scalar {
        &self.backward_rhs / &self.backward_lhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeRow {
    pub t: Scalar,
    pub d_t: Scalar,
    pub d_minus_t: Scalar,
    pub asymmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContrapositiveRow {
    pub n: usize,
    pub p: u128,
    pub c_pow: Scalar,
    /// `P_U(n) / c^n`.
    pub margin: Scalar,
    pub holds: bool,
}

/// For an asymmetric probe `t`:
/// `c = max(d_t / d_{-t}, d_{-t} / d_t)^{1/(t-1)}` and the check `P_U(n) >= c^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contrapositive {
    pub t: Scalar,
    pub c: Scalar,
    pub rows: Vec<ContrapositiveRow>,
}

impl Contrapositive {
    /// Largest `n` such that `P_U(k) >= c^k` for every `k` in `1..=n`.
    pub fn confirmed_through(&self) -> usize {
        self.rows.iter().take_while(|r| r.holds).last().map_or(0, |r| r.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremAudit {
    pub n_max: usize,
    pub probes: Vec<ProbeRow>,
    /// Ordered by `n`, then by probe.
    pub rows: Vec<InequalityRow>,
    pub symmetry: SymmetryVerdict,
    /// Verdict of the power-sum route; must agree with `symmetry`.
    pub newton_symmetric: bool,
    pub contrapositive: Vec<Contrapositive>,
}

pub fn theorem_audit(
    ring: &FusionRing,
    u: &Decomposition,
    n_max: usize,
    probes: &[Scalar],
) -> Result<TheoremAudit> {
    validate(n_max, probes)?;
    let prec = ring.precision();
    let spectrum = ring.spectrum_of(u)?;
    let growth = growth_table(ring, u, n_max)?.p_values();
    audit_spectrum(&spectrum, &growth, probes, prec)
}

fn validate(n_max: usize, probes: &[Scalar]) -> Result<()> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    if probes.is_empty() {
        return Err(Error::InvalidArgument("at least one probe exponent is required".into()));
    }
    match probes.iter().find(|t| **t <= Scalar::one()) {
        Some(t) => Err(Error::InvalidArgument(format!("probe exponents must exceed 1, got {t}"))),
        None => Ok(()),
    }
}

/// Audit of a spectrum against given `P_U(0..=n_max)` values.
///
/// Any violated inequality is returned as [`Error::InequalityViolation`].
pub fn audit_spectrum(
    spectrum: &RhoSpectrum,
    growth: &[u128],
    probes: &[Scalar],
    prec: Precision,
) -> Result<TheoremAudit> {
    let n_max = growth.len().saturating_sub(1);
    validate(n_max, probes)?;
    let slack = Scalar::one() + prec.tolerance();

    let probe_rows: Vec<ProbeRow> = probes
        .iter()
        .map(|t| {
            let d_t = spectrum.d_t(t, prec);
            let d_minus_t = spectrum.d_t(&-t, prec);
            let asymmetric = !prec.close_relative(&d_t, &d_minus_t);
            ProbeRow { t: t.clone(), d_t, d_minus_t, asymmetric }
        })
        .collect();

    let mut rows = Vec::with_capacity(growth.len() * probes.len());
    for (n, &p) in growth.iter().enumerate() {
        let big_p = Scalar::from_u128(p);
        for probe in &probe_rows {
            let factor = big_p.powf(&(&probe.t - Scalar::one()), prec);
            let e = n as i64;
            let (dt_n, dmt_n) = (probe.d_t.powi(e), probe.d_minus_t.powi(e));
            let row = InequalityRow {
                n,
                t: probe.t.clone(),
                p,
                forward_rhs: &factor * &dmt_n,
                backward_rhs: &factor * &dt_n,
                forward_lhs: dt_n,
                backward_lhs: dmt_n,
            };
            for (lhs, rhs, which) in [
                (&row.forward_lhs, &row.forward_rhs, "d_t^n <= P^(t-1) d_-t^n"),
                (&row.backward_lhs, &row.backward_rhs, "d_-t^n <= P^(t-1) d_t^n"),
            ] {
                if *lhs > rhs * &slack {
                    return Err(Error::InequalityViolation {
                        n,
                        t: row.t.clone(),
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                        which,
                    });
                }
            }
            rows.push(row);
        }
    }

    let contrapositive = probe_rows
        .iter()
        .filter(|probe| probe.asymmetric)
        .map(|probe| {
            let ratio = &probe.d_t / &probe.d_minus_t;
            let ratio = if ratio >= Scalar::one() { ratio } else { ratio.recip() };
            let c = ratio.powf(&(&probe.t - Scalar::one()).recip(), prec);
            let rows = growth
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, &p)| {
                    let c_pow = c.powi(n as i64);
                    let big_p = Scalar::from_u128(p);
                    ContrapositiveRow { n, p, margin: &big_p / &c_pow, holds: big_p >= c_pow, c_pow }
                })
                .collect();
            Contrapositive { t: probe.t.clone(), c, rows }
        })
        .collect();

    Ok(TheoremAudit {
        n_max,
        probes: probe_rows,
        rows,
        symmetry: spectrum.is_symmetric(prec),
        newton_symmetric: spectrum.is_symmetric_by_power_sums(prec),
        contrapositive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ErrorKind;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn kac_reduces_to_dimension_powers() {
        let ring = FusionRing::ao_kac(3, prec()).unwrap();
        let audit = theorem_audit(&ring, &ring.fundamental(), 4, &default_probes()).unwrap();
        assert!(audit.symmetry.symmetric && audit.newton_symmetric);
        assert!(audit.contrapositive.is_empty());
        let row = audit.rows.iter().find(|r| r.n == 2 && r.t == Scalar::from_int(2)).unwrap();
        assert_eq!(row.p, 8);
        assert_eq!(row.forward_lhs, Scalar::from_int(9));
        assert_eq!(row.forward_rhs, Scalar::from_int(72));
    }

    #[test]
    fn rejects_bad_probes() {
        let ring = FusionRing::ao_kac(2, prec()).unwrap();
        let err = theorem_audit(&ring, &ring.fundamental(), 3, &[Scalar::one()]).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::Validation);
        assert!(theorem_audit(&ring, &ring.fundamental(), 0, &default_probes()).is_err());
    }

    #[test]
    fn inconsistent_growth_is_an_internal_error() {
        let spectrum = RhoSpectrum::new(vec![Scalar::from_int(2), Scalar::ratio(1, 2), Scalar::one()], prec()).unwrap();
        // P_U(n) = 1 is only consistent with d_t = d_{-t}.
        let asym = RhoSpectrum::new(vec![Scalar::from_int(4), Scalar::ratio(1, 2)], prec()).unwrap();
        assert!(audit_spectrum(&spectrum, &[1, 1, 1], &default_probes(), prec()).is_ok());
        let err = audit_spectrum(&asym, &[1, 1, 1], &default_probes(), prec()).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::Internal);
        assert!(matches!(err, Error::InequalityViolation { n: 1, .. }));
    }
}
