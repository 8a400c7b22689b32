use std::fmt;

/// A letter of the free-unitary alphabet: the fundamental `u` or its conjugate `ū`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    U,
    UBar,
}

impl Letter {
    pub fn conj(self) -> Letter {
        match self {
            Letter::U => Letter::UBar,
            Letter::UBar => Letter::U,
        }
    }

    /// ASCII spelling: `u` for the fundamental, `U` for its conjugate.
    pub fn ascii(self) -> char {
        match self {
            Letter::U => 'u',
            Letter::UBar => 'U',
        }
    }
}

/// Conjugate of a word: reverse it and swap every letter.
pub fn conjugate_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.conj()).collect()
}

/// An irreducible representation, up to equivalence, in one of the catalogs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepLabel {
    /// `V(r)` in the Temperley-Lieb fusion ring.
    Tl(u32),
    /// A word over `{u, ū}`; the empty word is the trivial representation.
    Word(Vec<Letter>),
    /// An element of the free abelian group `Z^k`, as an exponent vector.
    Abelian(Vec<i64>),
    /// A reduced word in a free group. Generator `i` (1-based) is written
    /// `i`, its inverse `-i`; the empty word is the identity.
    Free(Vec<i64>),
}

impl IrrepLabel {
    pub fn word(letters: &[Letter]) -> IrrepLabel {
        IrrepLabel::Word(letters.to_vec())
    }

    /// Length of the label from the trivial one: `r`, word length, or
    /// word length in the generators.
    pub fn depth(&self) -> u64 {
        match self {
            IrrepLabel::Tl(r) => u64::from(*r),
            IrrepLabel::Word(w) => w.len() as u64,
            IrrepLabel::Abelian(v) => v.iter().map(|x| x.unsigned_abs()).sum(),
            IrrepLabel::Free(w) => w.len() as u64,
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Tl(r) => write!(f, "V({r})"),
            IrrepLabel::Word(w) => {
                let letters: String = w.iter().map(|l| l.ascii()).collect();
                write!(f, "word({letters})")
            }
            IrrepLabel::Abelian(v) => write_ints(f, v),
            IrrepLabel::Free(w) if w.is_empty() => f.write_str("g(0)"),
            IrrepLabel::Free(w) => write_ints(f, w),
        }
    }
}

fn write_ints(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    write!(f, "g({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{UBar, U};

    #[test]
    fn conjugation_reverses_and_swaps() {
        assert_eq!(conjugate_word(&[U, UBar, U]), vec![UBar, U, UBar]);
        assert_eq!(conjugate_word(&[U, U]), vec![UBar, UBar]);
        let w = vec![U, U, UBar];
        assert_eq!(conjugate_word(&conjugate_word(&w)), w);
    }

    #[test]
    fn display() {
        assert_eq!(IrrepLabel::Tl(3).to_string(), "V(3)");
        assert_eq!(IrrepLabel::word(&[U, UBar]).to_string(), "word(uU)");
        assert_eq!(IrrepLabel::Abelian(vec![1, -2]).to_string(), "g(1,-2)");
        assert_eq!(IrrepLabel::Free(vec![]).to_string(), "g(0)");
    }
}
