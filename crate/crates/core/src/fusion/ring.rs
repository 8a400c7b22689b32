use std::collections::HashMap;
use std::sync::RwLock;

use super::free_unitary::{word_dimension, word_fuse};
use super::group_dual::{abelian_sum, free_inverse, free_product, reduce_free};
use super::label::conjugate_word;
use super::temperley_lieb::{tl_dimension, tl_fuse};
use super::{Decomposition, IrrepLabel, Letter};
use crate::error::{Error, Result};
use crate::numerics::{Complex, ComplexMatrix, Precision, Scalar};
use crate::spectra::{rho_from_f, RhoSpectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    FreeAbelian { rank: usize },
    Free { rank: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Catalog {
    /// `A_o(F)` / `SU_q(2)` with an `n`-dimensional fundamental representation.
    TemperleyLieb { n: u64 },
    /// `A_u(F)` with `F` of size `n`.
    FreeUnitary { n: u64 },
    GroupDual(GroupKind),
}

impl Catalog {
    pub fn name(&self) -> &'static str {
        match self {
            Catalog::TemperleyLieb { .. } => "temperley-lieb",
            Catalog::FreeUnitary { .. } => "free-unitary",
            Catalog::GroupDual(GroupKind::FreeAbelian { .. }) => "free-abelian group dual",
            Catalog::GroupDual(GroupKind::Free { .. }) => "free group dual",
        }
    }

    pub fn is_commutative(&self) -> bool {
        matches!(
            self,
            Catalog::TemperleyLieb { .. } | Catalog::GroupDual(GroupKind::FreeAbelian { .. })
        )
    }
}

/// Size limits that turn runaway computations into errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest total dimension of a decomposition built by fusion.
    pub max_total_dim: u128,
    /// Largest number of distinct labels in a decomposition.
    pub max_labels: usize,
    /// Largest spectrum (number of eigenvalues) that will be materialized.
    pub max_spectrum_len: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self { max_total_dim: 1_000_000_000_000, max_labels: 1_000_000, max_spectrum_len: 200_000 }
    }
}

/// A fusion-ring catalog together with the rho spectrum of its fundamental
/// representation.
///
/// Fusion products and derived irrep spectra are memoized behind read-write
/// locks; concurrent fills of the same key store identical values.
#[derive(Debug)]
pub struct FusionRing {
    catalog: Catalog,
    fundamental: RhoSpectrum,
    prec: Precision,
    guards: Guards,
    fusion_memo: RwLock<HashMap<(IrrepLabel, IrrepLabel), Decomposition>>,
    spectrum_memo: RwLock<HashMap<IrrepLabel, RhoSpectrum>>,
}

impl FusionRing {
    fn build(catalog: Catalog, fundamental: RhoSpectrum, prec: Precision) -> Self {
        Self {
            catalog,
            fundamental,
            prec,
            guards: Guards::default(),
            fusion_memo: RwLock::new(HashMap::new()),
            spectrum_memo: RwLock::new(HashMap::new()),
        }
    }

    /// Temperley-Lieb ring whose `V(1)` has the given rho spectrum.
    pub fn temperley_lieb(fundamental: RhoSpectrum, prec: Precision) -> Result<Self> {
        let n = fundamental.dim() as u64;
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "Temperley-Lieb catalog needs a fundamental of dimension >= 2, got {n}"
            )));
        }
        require_normalized(&fundamental)?;
        Ok(Self::build(Catalog::TemperleyLieb { n }, fundamental, prec))
    }

    /// `A_o(n)` with `F = 1`: the Kac case, every rho is the identity.
    pub fn ao_kac(n: usize, prec: Precision) -> Result<Self> {
        Self::temperley_lieb(RhoSpectrum::kac(n), prec)
    }

    /// `A_o(F)`. Admissibility of `F` is not checked.
    pub fn ao_from_f(f: &ComplexMatrix, auto_normalize: bool, prec: Precision) -> Result<Self> {
        Self::temperley_lieb(rho_from_f(f, auto_normalize, prec)?, prec)
    }

    /// `SU_q(2) = A_o(F)` with `F = [[0, 1], [-1/q, 0]]`.
    pub fn su_q2(q: &Scalar, prec: Precision) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::InvalidArgument(format!("q must be positive, got {q}")));
        }
        let f = ComplexMatrix::from_rows(vec![
            vec![Complex::zero(), Complex::real(Scalar::one())],
            vec![Complex::real(-q.recip()), Complex::zero()],
        ])?;
        Self::ao_from_f(&f, true, prec)
    }

    /// `A_u(F)` whose fundamental `u` has the given rho spectrum.
    pub fn free_unitary(fundamental: RhoSpectrum, prec: Precision) -> Result<Self> {
        let n = fundamental.dim() as u64;
        if n == 0 {
            return Err(Error::InvalidArgument("free unitary catalog needs a non-empty fundamental".into()));
        }
        require_normalized(&fundamental)?;
        Ok(Self::build(Catalog::FreeUnitary { n }, fundamental, prec))
    }

    pub fn au_from_f(f: &ComplexMatrix, auto_normalize: bool, prec: Precision) -> Result<Self> {
        Self::free_unitary(rho_from_f(f, auto_normalize, prec)?, prec)
    }

    pub fn group_dual(kind: GroupKind, prec: Precision) -> Result<Self> {
        let rank = match kind {
            GroupKind::FreeAbelian { rank } | GroupKind::Free { rank } => rank,
        };
        if rank == 0 {
            return Err(Error::InvalidArgument("group rank must be at least 1".into()));
        }
        Ok(Self::build(Catalog::GroupDual(kind), RhoSpectrum::trivial(), prec))
    }

    pub fn with_guards(mut self, guards: Guards) -> Self {
        self.guards = guards;
        self
    }

    pub fn catalog(&self) -> Catalog {
        self.catalog
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn guards(&self) -> Guards {
        self.guards
    }

    pub fn trivial(&self) -> IrrepLabel {
        match self.catalog {
            Catalog::TemperleyLieb { .. } => IrrepLabel::Tl(0),
            Catalog::FreeUnitary { .. } => IrrepLabel::Word(Vec::new()),
            Catalog::GroupDual(GroupKind::FreeAbelian { rank }) => IrrepLabel::Abelian(vec![0; rank]),
            Catalog::GroupDual(GroupKind::Free { .. }) => IrrepLabel::Free(Vec::new()),
        }
    }

    /// The generating representation: `V(1)`, the word `u`, or for a group
    /// dual the sum of all generators and their inverses.
    pub fn fundamental(&self) -> Decomposition {
        match self.catalog {
            Catalog::TemperleyLieb { .. } => Decomposition::single(IrrepLabel::Tl(1)),
            Catalog::FreeUnitary { .. } => Decomposition::single(IrrepLabel::Word(vec![Letter::U])),
            Catalog::GroupDual(GroupKind::FreeAbelian { rank }) => (0..rank)
                .flat_map(|i| {
                    [1i64, -1].into_iter().map(move |sign| {
                        let mut v = vec![0; rank];
                        v[i] = sign;
                        (IrrepLabel::Abelian(v), 1)
                    })
                })
                .collect(),
            Catalog::GroupDual(GroupKind::Free { rank }) => (1..=rank as i64)
                .flat_map(|g| [(IrrepLabel::Free(vec![g]), 1), (IrrepLabel::Free(vec![-g]), 1)])
                .collect(),
        }
    }

    /// Rho spectrum of the fundamental irreducible (`{1}` for group duals).
    pub fn fundamental_spectrum(&self) -> &RhoSpectrum {
        &self.fundamental
    }

    /// Checks that `label` belongs to this catalog.
    pub fn check(&self, label: &IrrepLabel) -> Result<()> {
        let ok = match (&self.catalog, label) {
            (Catalog::TemperleyLieb { .. }, IrrepLabel::Tl(_)) => true,
            (Catalog::FreeUnitary { .. }, IrrepLabel::Word(_)) => true,
            (Catalog::GroupDual(GroupKind::FreeAbelian { rank }), IrrepLabel::Abelian(v)) => v.len() == *rank,
            (Catalog::GroupDual(GroupKind::Free { rank }), IrrepLabel::Free(w)) => {
                w.iter().all(|&g| g != 0 && g.unsigned_abs() <= *rank as u64) && reduce_free(w) == *w
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ForeignLabel { label: label.to_string(), catalog: self.catalog.name().to_string() })
        }
    }

    pub fn check_decomposition(&self, d: &Decomposition) -> Result<()> {
        d.labels().try_for_each(|l| self.check(l))
    }

    pub fn dimension(&self, label: &IrrepLabel) -> Result<u128> {
        self.check(label)?;
        let dim = match (&self.catalog, label) {
            (Catalog::TemperleyLieb { n }, IrrepLabel::Tl(r)) => tl_dimension(*n, *r)
                .as_integer()
                .and_then(|z| u128::try_from(z).ok()),
            (Catalog::FreeUnitary { n }, IrrepLabel::Word(w)) => word_dimension(u128::from(*n), w),
            _ => Some(1),
        };
        dim.ok_or_else(|| Error::ResourceGuard {
            what: "irrep dimension",
            value: format!("dim {label} > 2^128"),
            limit: u128::MAX.to_string(),
        })
    }

    /// `sum of mult * dim` over the decomposition.
    pub fn total_dimension(&self, d: &Decomposition) -> Result<u128> {
        let mut total: u128 = 0;
        for (label, &mult) in d {
            let term = self.dimension(label)?.checked_mul(u128::from(mult));
            total = term.and_then(|t| total.checked_add(t)).ok_or_else(|| Error::ResourceGuard {
                what: "total dimension",
                value: "> 2^128".into(),
                limit: self.guards.max_total_dim.to_string(),
            })?;
        }
        Ok(total)
    }

    pub fn conjugate(&self, label: &IrrepLabel) -> Result<IrrepLabel> {
        self.check(label)?;
        Ok(match label {
            IrrepLabel::Tl(r) => IrrepLabel::Tl(*r),
            IrrepLabel::Word(w) => IrrepLabel::Word(conjugate_word(w)),
            IrrepLabel::Abelian(v) => IrrepLabel::Abelian(v.iter().map(|x| -x).collect()),
            IrrepLabel::Free(w) => IrrepLabel::Free(free_inverse(w)),
        })
    }

    pub fn conjugate_decomposition(&self, d: &Decomposition) -> Result<Decomposition> {
        let mut out = Decomposition::new();
        for (label, &mult) in d {
            out.add(self.conjugate(label)?, mult)?;
        }
        Ok(out)
    }

    /// Decomposition of `a (x) b` into irreducibles.
    pub fn fuse(&self, a: &IrrepLabel, b: &IrrepLabel) -> Result<Decomposition> {
        self.check(a)?;
        self.check(b)?;
        let key = if self.catalog.is_commutative() && b < a {
            (b.clone(), a.clone())
        } else {
            (a.clone(), b.clone())
        };
        if let Some(hit) = self.fusion_memo.read().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let product = match (&key.0, &key.1) {
            (IrrepLabel::Tl(r), IrrepLabel::Tl(s)) => tl_fuse(*r, *s),
            (IrrepLabel::Word(v), IrrepLabel::Word(w)) => word_fuse(v, w),
            (IrrepLabel::Abelian(v), IrrepLabel::Abelian(w)) => {
                Decomposition::single(IrrepLabel::Abelian(abelian_sum(v, w)))
            }
            (IrrepLabel::Free(v), IrrepLabel::Free(w)) => Decomposition::single(IrrepLabel::Free(free_product(v, w))),
            _ => unreachable!("labels were checked against the catalog"),
        };
        self.fusion_memo
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert_with(|| product.clone());
        Ok(product)
    }

    /// Bilinear extension of [`FusionRing::fuse`].
    pub fn fuse_decompositions(&self, x: &Decomposition, y: &Decomposition) -> Result<Decomposition> {
        let (dx, dy) = (self.total_dimension(x)?, self.total_dimension(y)?);
        let total = dx.checked_mul(dy).filter(|t| *t <= self.guards.max_total_dim);
        if total.is_none() {
            return Err(Error::ResourceGuard {
                what: "total dimension",
                value: format!("{dx} * {dy}"),
                limit: self.guards.max_total_dim.to_string(),
            });
        }
        let mut out = Decomposition::new();
        for (a, &ma) in x {
            for (b, &mb) in y {
                let weight = ma.checked_mul(mb).ok_or_else(|| Error::ResourceGuard {
                    what: "multiplicity",
                    value: format!("{ma} * {mb}"),
                    limit: u64::MAX.to_string(),
                })?;
                out.merge(&self.fuse(a, b)?.scaled(weight)?)?;
            }
            if out.len() > self.guards.max_labels {
                return Err(Error::ResourceGuard {
                    what: "label count",
                    value: out.len().to_string(),
                    limit: self.guards.max_labels.to_string(),
                });
            }
        }
        Ok(out)
    }

    /// `u^{(x) k}` for `k = 0..=n`, starting from the trivial representation.
    pub fn power_sequence(&self, u: &Decomposition, n: usize) -> Result<Vec<Decomposition>> {
        self.check_decomposition(u)?;
        let mut powers = Vec::with_capacity(n + 1);
        powers.push(Decomposition::single(self.trivial()));
        for k in 1..=n {
            let next = self.fuse_decompositions(&powers[k - 1], u)?;
            powers.push(next);
        }
        Ok(powers)
    }

    pub fn decompose_power(&self, u: &Decomposition, n: usize) -> Result<Decomposition> {
        Ok(self.power_sequence(u, n)?.pop().expect("non-empty"))
    }

    /// Rho spectrum of an irreducible.
    ///
    /// Labels of depth two or more are reached as `parent (x) letter`, whose
    /// spectrum is the tensor product of the two known spectra; removing the
    /// spectra of the other (shallower) summands leaves the new irreducible.
    pub fn irrep_spectrum(&self, label: &IrrepLabel) -> Result<RhoSpectrum> {
        self.check(label)?;
        if let Catalog::GroupDual(_) = self.catalog {
            return Ok(RhoSpectrum::trivial());
        }
        let dim = self.dimension(label)?;
        if dim > self.guards.max_spectrum_len as u128 {
            return Err(Error::ResourceGuard {
                what: "spectrum length",
                value: dim.to_string(),
                limit: self.guards.max_spectrum_len.to_string(),
            });
        }
        if let Some(hit) = self.spectrum_memo.read().expect("memo lock").get(label) {
            return Ok(hit.clone());
        }
        let chain: Vec<IrrepLabel> = match label {
            IrrepLabel::Tl(r) => (0..=*r).map(IrrepLabel::Tl).collect(),
            IrrepLabel::Word(w) => (0..=w.len()).map(|k| IrrepLabel::Word(w[..k].to_vec())).collect(),
            _ => unreachable!("group duals handled above"),
        };
        let mut last = RhoSpectrum::trivial();
        for link in &chain {
            let cached = self.spectrum_memo.read().expect("memo lock").get(link).cloned();
            last = match cached {
                Some(s) => s,
                None => {
                    let s = self.derive_spectrum(link)?;
                    self.spectrum_memo
                        .write()
                        .expect("memo lock")
                        .entry(link.clone())
                        .or_insert_with(|| s.clone());
                    s
                }
            };
        }
        Ok(last)
    }

    fn derive_spectrum(&self, label: &IrrepLabel) -> Result<RhoSpectrum> {
        let (parent, letter) = match label {
            IrrepLabel::Tl(0) => return Ok(RhoSpectrum::trivial()),
            IrrepLabel::Tl(1) => return Ok(self.fundamental.clone()),
            IrrepLabel::Tl(r) => (IrrepLabel::Tl(r - 1), IrrepLabel::Tl(1)),
            IrrepLabel::Word(w) => match w.as_slice() {
                [] => return Ok(RhoSpectrum::trivial()),
                [Letter::U] => return Ok(self.fundamental.clone()),
                [Letter::UBar] => return Ok(self.fundamental.inverse()),
                [prefix @ .., last] => (IrrepLabel::Word(prefix.to_vec()), IrrepLabel::Word(vec![*last])),
            },
            _ => unreachable!("group duals have trivial spectra"),
        };
        let product = self.fuse(&parent, &letter)?;
        if product.multiplicity(label) != 1 {
            return Err(Error::UnreachableLabel {
                label: label.to_string(),
                reason: format!("{parent} (x) {letter} = {product}"),
            });
        }
        let mut whole = self.irrep_spectrum(&parent)?.tensor(&self.irrep_spectrum(&letter)?, self.prec);
        for (other, &mult) in &product {
            if other != label {
                let part = self.irrep_spectrum(other)?.repeated(mult as usize);
                whole = whole.subtract(&part, self.prec)?;
            }
        }
        Ok(whole)
    }

    /// Rho spectrum of a (reducible) representation.
    pub fn spectrum_of(&self, d: &Decomposition) -> Result<RhoSpectrum> {
        let total = self.total_dimension(d)?;
        if total > self.guards.max_spectrum_len as u128 {
            return Err(Error::ResourceGuard {
                what: "spectrum length",
                value: total.to_string(),
                limit: self.guards.max_spectrum_len.to_string(),
            });
        }
        let mut out = RhoSpectrum::empty();
        for (label, &mult) in d {
            out = out.direct_sum(&self.irrep_spectrum(label)?.repeated(mult as usize), self.prec);
        }
        Ok(out)
    }
}

fn require_normalized(fundamental: &RhoSpectrum) -> Result<()> {
    if fundamental.is_normalized() {
        Ok(())
    } else {
        Err(Error::TraceCondition { trace: fundamental.trace(), inverse_trace: fundamental.inverse_trace() })
    }
}
