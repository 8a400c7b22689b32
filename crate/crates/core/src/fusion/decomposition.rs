use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;

use super::IrrepLabel;
use crate::error::{Error, Result};

/// A representation up to equivalence: irreducible labels with positive
/// multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    terms: BTreeMap<IrrepLabel, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: IrrepLabel) -> Self {
        let mut d = Self::new();
        d.terms.insert(label, 1);
        d
    }

    /// Adds `mult` copies of `label`.
    pub fn add(&mut self, label: IrrepLabel, mult: u64) -> Result<()> {
        if mult == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(label).or_insert(0);
        *entry = entry.checked_add(mult).ok_or_else(multiplicity_overflow)?;
        Ok(())
    }

    /// Direct sum.
    pub fn merge(&mut self, other: &Decomposition) -> Result<()> {
        for (label, &mult) in &other.terms {
            self.add(label.clone(), mult)?;
        }
        Ok(())
    }

    pub fn scaled(&self, factor: u64) -> Result<Decomposition> {
        let mut out = Decomposition::new();
        for (label, &mult) in &self.terms {
            out.add(label.clone(), mult.checked_mul(factor).ok_or_else(multiplicity_overflow)?)?;
        }
        Ok(out)
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, IrrepLabel, u64> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &IrrepLabel> {
        self.terms.keys()
    }

    /// Number of distinct irreducible labels.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn multiplicity_overflow() -> Error {
    Error::ResourceGuard { what: "multiplicity", value: "> u64::MAX".into(), limit: u64::MAX.to_string() }
}

impl<'a> IntoIterator for &'a Decomposition {
    type Item = (&'a IrrepLabel, &'a u64);
    type IntoIter = btree_map::Iter<'a, IrrepLabel, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl FromIterator<(IrrepLabel, u64)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (IrrepLabel, u64)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (label, mult) in iter {
            d.add(label, mult).expect("multiplicity overflow");
        }
        d
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (label, mult)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{label}:{mult}")?;
        }
        f.write_str("}")
    }
}
