//! Eigenvalue multisets of rho operators and the operations the rho
//! operators inherit from representations: direct sums, tensor products
//! and conjugation.

mod from_f;
mod newton;

use std::fmt;

pub use from_f::rho_from_f;
pub use newton::{newton_reconstruct, power_sums, same_multiset_by_power_sums};

use crate::error::{Error, Result};
use crate::numerics::{Precision, Scalar};

/// The eigenvalues of a rho operator, sorted descending, with multiplicity.
///
/// Every entry is strictly positive. The `normalized` tag records whether
/// `sum(l) == sum(1/l)` holds (within tolerance for floats), which is the
/// defining trace property of rho for a genuine representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoSpectrum {
    eigenvalues: Vec<Scalar>,
    normalized: bool,
}

impl RhoSpectrum {
    pub fn new(values: Vec<Scalar>, prec: Precision) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::NonPositiveEigenvalue(bad.clone()));
        }
        let mut eigenvalues = values;
        eigenvalues.sort_by(|a, b| b.cmp(a));
        let normalized = trace_condition_holds(&eigenvalues, prec);
        Ok(Self { eigenvalues, normalized })
    }

    /// The zero representation.
    pub fn empty() -> Self {
        Self { eigenvalues: Vec::new(), normalized: true }
    }

    pub fn trivial() -> Self {
        Self::kac(1)
    }

    /// `dim` copies of 1: the spectrum of any representation of a Kac-type group.
    pub fn kac(dim: usize) -> Self {
        Self { eigenvalues: vec![Scalar::one(); dim], normalized: true }
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn trace(&self) -> Scalar {
        self.eigenvalues.iter().sum()
    }

    pub fn inverse_trace(&self) -> Scalar {
        self.eigenvalues.iter().map(Scalar::recip).sum()
    }

    /// `d_t = Tr(rho^t) = sum of l^t`. `d_0` is the dimension.
    pub fn d_t(&self, t: &Scalar, prec: Precision) -> Scalar {
        if t.is_zero() {
            return Scalar::from_int(self.dim() as i64);
        }
        self.eigenvalues.iter().map(|l| l.powf(t, prec)).sum()
    }

    pub fn profile(&self, exponents: &[Scalar], prec: Precision) -> DtProfile {
        let rows = exponents
            .iter()
            .map(|t| DtRow {
                t: t.clone(),
                d_t: self.d_t(t, prec),
                d_minus_t: self.d_t(&-t, prec),
            })
            .collect();
        DtProfile { rows }
    }

    /// Reciprocals, re-sorted. This is both the spectrum of `rho^-1` and the
    /// spectrum of the conjugate representation.
    pub fn inverse(&self) -> RhoSpectrum {
        let eigenvalues = self.eigenvalues.iter().rev().map(Scalar::recip).collect();
        RhoSpectrum { eigenvalues, normalized: self.normalized }
    }

    /// Compares the sorted eigenvalues with the sorted reciprocals entry by
    /// entry, using the eigenvalue tie rule of `prec`.
    pub fn is_symmetric(&self, prec: Precision) -> SymmetryVerdict {
        let inverse = self.inverse();
        let witness = self
            .eigenvalues
            .iter()
            .zip(inverse.eigenvalues())
            .enumerate()
            .find(|(_, (l, m))| !prec.ties(l, m))
            .map(|(index, (l, m))| Mismatch {
                index,
                eigenvalue: l.clone(),
                inverse_eigenvalue: m.clone(),
            });
        SymmetryVerdict { symmetric: witness.is_none(), witness }
    }

    /// The symmetry decision through power sums and Newton's identities.
    pub fn is_symmetric_by_power_sums(&self, prec: Precision) -> bool {
        same_multiset_by_power_sums(&self.eigenvalues, self.inverse().eigenvalues(), prec)
    }

    /// All pairwise products.
    pub fn tensor(&self, other: &RhoSpectrum, prec: Precision) -> RhoSpectrum {
        let mut eigenvalues: Vec<Scalar> = self
            .eigenvalues
            .iter()
            .flat_map(|l| other.eigenvalues.iter().map(move |m| l * m))
            .collect();
        eigenvalues.sort_by(|a, b| b.cmp(a));
        RhoSpectrum::tagged(eigenvalues, self.normalized && other.normalized, prec)
    }

    /// Multiset union.
    pub fn direct_sum(&self, other: &RhoSpectrum, prec: Precision) -> RhoSpectrum {
        let mut eigenvalues = Vec::with_capacity(self.dim() + other.dim());
        let (mut a, mut b) = (self.eigenvalues.iter().peekable(), other.eigenvalues.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x >= y => a.next(),
                (Some(_), Some(_)) => b.next(),
                (Some(_), None) => a.next(),
                (None, Some(_)) => b.next(),
                (None, None) => break,
            };
            eigenvalues.extend(next.cloned());
        }
        RhoSpectrum::tagged(eigenvalues, self.normalized && other.normalized, prec)
    }

    // Normalization is preserved by sums and products; only recheck when an
    // operand was not normalized.
    fn tagged(eigenvalues: Vec<Scalar>, inherited: bool, prec: Precision) -> RhoSpectrum {
        let normalized = inherited || trace_condition_holds(&eigenvalues, prec);
        RhoSpectrum { eigenvalues, normalized }
    }

    /// `n` copies of `self` summed.
    pub fn repeated(&self, n: usize) -> RhoSpectrum {
        let mut eigenvalues: Vec<Scalar> =
            self.eigenvalues.iter().flat_map(|l| std::iter::repeat(l.clone()).take(n)).collect();
        eigenvalues.sort_by(|a, b| b.cmp(a));
        RhoSpectrum { eigenvalues, normalized: self.normalized }
    }

    /// Removes one matching copy of every element of `part`.
    ///
    /// Each element of `part` is paired with the nearest remaining element of
    /// `self`; the pair must tie under the eigenvalue tie rule.
    pub fn subtract(&self, part: &RhoSpectrum, prec: Precision) -> Result<RhoSpectrum> {
        let mut rest = self.eigenvalues.clone();
        for p in &part.eigenvalues {
            // `rest` is descending: [0, idx) holds the entries strictly above p.
            let idx = rest.partition_point(|x| x > p);
            let below = rest.get(idx).map(|x| (idx, (x - p).abs()));
            let above = idx.checked_sub(1).map(|i| (i, (&rest[i] - p).abs()));
            let nearest = match (above, below) {
                (Some(a), Some(b)) => Some(if a.1 < b.1 { a } else { b }),
                (a, b) => a.or(b),
            };
            match nearest {
                Some((i, _)) if prec.ties(p, &rest[i]) => {
                    rest.remove(i);
                }
                Some((i, gap)) => {
                    return Err(Error::UnmatchedElement {
                        orphan: p.clone(),
                        closest: Some(rest[i].clone()),
                        gap: Some(gap),
                    })
                }
                None => return Err(Error::UnmatchedElement { orphan: p.clone(), closest: None, gap: None }),
            }
        }
        let normalized = trace_condition_holds(&rest, prec);
        Ok(RhoSpectrum { eigenvalues: rest, normalized })
    }

    /// Multiplies every eigenvalue by `factor > 0`.
    pub fn scaled(&self, factor: &Scalar, prec: Precision) -> Result<RhoSpectrum> {
        RhoSpectrum::new(self.eigenvalues.iter().map(|l| l * factor).collect(), prec)
    }

    /// Element-wise comparison of two spectra under the eigenvalue tie rule.
    pub fn approx_eq(&self, other: &RhoSpectrum, prec: Precision) -> bool {
        self.dim() == other.dim()
            && self.eigenvalues.iter().zip(&other.eigenvalues).all(|(a, b)| prec.ties(a, b))
    }

    /// Largest entry-wise gap to `other`, or `None` if dimensions differ.
    pub fn max_gap(&self, other: &RhoSpectrum) -> Option<Scalar> {
        (self.dim() == other.dim()).then(|| {
            self.eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .max()
                .unwrap_or_else(Scalar::zero)
        })
    }
}

fn trace_condition_holds(values: &[Scalar], prec: Precision) -> bool {
    let trace: Scalar = values.iter().sum();
    let inverse: Scalar = values.iter().map(Scalar::recip).sum();
    prec.close_relative(&trace, &inverse)
}

impl fmt::Display for RhoSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.eigenvalues.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub eigenvalue: Scalar,
    pub inverse_eigenvalue: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub symmetric: bool,
    /// First position where the spectrum and its inverse disagree.
    pub witness: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtRow {
    pub t: Scalar,
    pub d_t: Scalar,
    pub d_minus_t: Scalar,
}

impl DtRow {
    pub fn ratio(&self) -> Scalar {
        &self.d_t / &self.d_minus_t
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtProfile {
    pub rows: Vec<DtRow>,
}

impl DtProfile {
    pub fn exponents(&self) -> impl Iterator<Item = &Scalar> {
        self.rows.iter().map(|r| &r.t)
    }

    pub fn values(&self) -> impl Iterator<Item = &Scalar> {
        self.rows.iter().map(|r| &r.d_t)
    }
}
