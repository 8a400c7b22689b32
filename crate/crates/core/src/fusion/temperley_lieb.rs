//! Temperley-Lieb fusion: the representation ring of `A_o(F)` and `SU_q(2)`.

use dashu::integer::IBig;

use super::{Decomposition, IrrepLabel};
use crate::error::Result;
use crate::numerics::{Precision, Scalar};
use crate::spectra::RhoSpectrum;

/// Dimension `z_r` of `V(r)` when the fundamental has dimension `n`:
/// `z_0 = 1`, `z_1 = n`, `z_{r+1} = n z_r - z_{r-1}`.
pub fn tl_dimension(n: u64, r: u32) -> Scalar {
    let mut prev = IBig::ONE;
    if r == 0 {
        return Scalar::Exact(prev.into());
    }
    let n = IBig::from(n);
    let mut cur = n.clone();
    for _ in 1..r {
        let next = &n * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Scalar::Exact(cur.into())
}

/// `V(r) (x) V(s) = V(|r-s|) + V(|r-s|+2) + ... + V(r+s)`.
pub fn tl_fuse(r: u32, s: u32) -> Decomposition {
    (0..=r.min(s)).map(|k| (IrrepLabel::Tl(r + s - 2 * k), 1)).collect()
}

/// Closed-form spectrum `{q^r, q^(r-2), ..., q^(-r)}` of `V(r)` for `SU_q(2)`.
pub fn su_q2_spectrum(q: &Scalar, r: u32, prec: Precision) -> Result<RhoSpectrum> {
    let r = i64::from(r);
    RhoSpectrum::new((0..=r).map(|k| q.powi(r - 2 * k)).collect(), prec)
}
