use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::fusion::{Decomposition, FusionRing, IrrepLabel};
use crate::numerics::{Precision, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: usize,
    /// Largest irreducible dimension in `U^{(x) n}`.
    pub p: u128,
    /// Sum of squared dimensions of the distinct irreducibles in powers `0..=n`.
    pub b: u128,
}

/// `P_U(n)` and `b(U, n)` for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn p_values(&self) -> Vec<u128> {
        self.rows.iter().map(|r| r.p).collect()
    }

    /// `b(U, n)^{1/n}`, undefined at `n = 0`.
    pub fn b_root(&self, n: usize, prec: Precision) -> Option<Scalar> {
        let row = self.rows.get(n).filter(|_| n > 0)?;
        Some(Scalar::from_u128(row.b).nth_root(n, prec))
    }

    /// `sqrt(b(U, n) / b(U, n-1))`: the per-step growth of irreducible
    /// dimensions implied by `b`.
    pub fn step_base(&self, n: usize, prec: Precision) -> Option<Scalar> {
        let (prev, row) = (self.rows.get(n.checked_sub(1)?)?, self.rows.get(n)?);
        Some((Scalar::from_u128(row.b) / Scalar::from_u128(prev.b)).sqrt(prec))
    }

    fn check(&self) {
        for pair in self.rows.windows(2) {
            debug_assert!(pair[0].b <= pair[1].b, "b(U, n) must be non-decreasing");
        }
        debug_assert!(self.rows.iter().all(|r| r.p <= r.b), "P_U(n) <= b(U, n)");
    }
}

fn largest_dimension(ring: &FusionRing, d: &Decomposition) -> Result<u128> {
    d.labels().try_fold(0, |m, l| Ok(m.max(ring.dimension(l)?)))
}

pub fn growth_table(ring: &FusionRing, u: &Decomposition, n_max: usize) -> Result<GrowthTable> {
    let powers = ring.power_sequence(u, n_max)?;
    let mut seen: BTreeSet<&IrrepLabel> = BTreeSet::new();
    let mut b: u128 = 0;
    let mut rows = Vec::with_capacity(powers.len());
    for (n, power) in powers.iter().enumerate() {
        for label in power.labels() {
            if seen.insert(label) {
                let dim = ring.dimension(label)?;
                b = dim
                    .checked_mul(dim)
                    .and_then(|sq| b.checked_add(sq))
                    .ok_or_else(|| Error::ResourceGuard {
                        what: "b(U, n)",
                        value: "> 2^128".into(),
                        limit: u128::MAX.to_string(),
                    })?;
            }
        }
        rows.push(GrowthRow { n, p: largest_dimension(ring, power)?, b });
    }
    let table = GrowthTable { rows };
    table.check();
    Ok(table)
}

pub fn p_growth(ring: &FusionRing, u: &Decomposition, n: usize) -> Result<u128> {
    largest_dimension(ring, &ring.decompose_power(u, n)?)
}

pub fn b_growth(ring: &FusionRing, u: &Decomposition, n: usize) -> Result<u128> {
    Ok(growth_table(ring, u, n)?.rows[n].b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    SubexponentialConsistent,
    ExponentialConsistent,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthClass::SubexponentialConsistent => "subexponential-consistent",
            GrowthClass::ExponentialConsistent => "exponential-consistent",
        })
    }
}

/// Band of base estimates read as "no exponential growth seen".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateBand {
    pub lower: Scalar,
    pub upper: Scalar,
}

impl Default for RateBand {
    fn default() -> Self {
        Self { lower: Scalar::one(), upper: Scalar::ratio(105, 100) }
    }
}

/// Finite-sample growth estimate. The classification is a heuristic on the
/// computed range and says nothing about the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateEstimate {
    pub n_max: usize,
    /// `b(U, N)^{1/N}`.
    pub root: Scalar,
    /// Least-squares slope of `ln b(U, n)` over the last half-window.
    pub log_slope: Scalar,
    /// `sqrt(b(U, n) / b(U, n-1))` for each `n` in the last half-window.
    pub window: Vec<(usize, Scalar)>,
    /// The last entry of `window`.
    pub base: Scalar,
    pub class: GrowthClass,
}

pub const MIN_RATE_N: usize = 4;

pub fn estimate_rate(table: &GrowthTable, band: &RateBand, prec: Precision) -> Result<RateEstimate> {
    let n_max = table.n_max();
    if table.rows.len() <= MIN_RATE_N {
        return Err(Error::InsufficientRows { have: table.rows.len(), needed: MIN_RATE_N + 1 });
    }
    let start = n_max - n_max / 2;
    let window: Vec<(usize, Scalar)> =
        (start..=n_max).map(|n| (n, table.step_base(n, prec).expect("n >= 1"))).collect();
    let base = window.last().expect("non-empty window").1.clone();
    let slack = prec.tolerance();
    let non_increasing = window.windows(2).all(|w| w[1].1 <= &w[0].1 + &slack);
    let in_band = base >= band.lower && base <= band.upper;
    let class = if in_band && non_increasing {
        GrowthClass::SubexponentialConsistent
    } else {
        GrowthClass::ExponentialConsistent
    };
    Ok(RateEstimate {
        n_max,
        root: table.b_root(n_max, prec).expect("n_max >= 1"),
        log_slope: log_slope(table, start, prec),
        window,
        base,
        class,
    })
}

fn log_slope(table: &GrowthTable, start: usize, prec: Precision) -> Scalar {
    let points: Vec<(Scalar, Scalar)> = table.rows[start..]
        .iter()
        .map(|r| (Scalar::from_int(r.n as i64), Scalar::from_u128(r.b).ln(prec)))
        .collect();
    let k = Scalar::from_int(points.len() as i64);
    let mean_x = points.iter().map(|p| p.0.clone()).sum::<Scalar>() / &k;
    let mean_y = points.iter().map(|p| p.1.clone()).sum::<Scalar>() / &k;
    let mut num = Scalar::zero();
    let mut den = Scalar::zero();
    for (x, y) in &points {
        let dx = x - &mean_x;
        num = num + &dx * (y - &mean_y);
        den = den + &dx * &dx;
    }
    num / den
}
