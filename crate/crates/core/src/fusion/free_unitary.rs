//! Free fusion for the free unitary quantum group `A_u(F)`.
//!
//! Irreducibles are words over `{u, ū}` and
//! `w (x) w' = sum over splittings w = a g, w' = conj(g) b of a b`.

use super::label::conjugate_word;
use super::{Decomposition, IrrepLabel, Letter};

/// Dimension of the irreducible labelled `word` when `dim u = n`.
///
/// Follows from `w (x) x = w x + w'` where the second term is present
/// exactly when `w = w' conj(x)`.
pub fn word_dimension(n: u128, word: &[Letter]) -> Option<u128> {
    let mut dims: Vec<u128> = Vec::with_capacity(word.len() + 1);
    dims.push(1);
    for (i, &letter) in word.iter().enumerate() {
        let mut d = dims[i].checked_mul(n)?;
        if i > 0 && word[i - 1] == letter.conj() {
            d -= dims[i - 1];
        }
        dims.push(d);
    }
    dims.last().copied()
}

pub fn word_fuse(left: &[Letter], right: &[Letter]) -> Decomposition {
    let mut out = Decomposition::new();
    for k in 0..=left.len().min(right.len()) {
        let (a, g) = left.split_at(left.len() - k);
        let (g_bar, b) = right.split_at(k);
        if conjugate_word(g) == g_bar {
            let mut word = a.to_vec();
            word.extend_from_slice(b);
            out.add(IrrepLabel::Word(word), 1).expect("multiplicity one");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{UBar, U};

    /// Enumerate every split point of both words independently and keep the
    /// compatible ones.
    fn brute_force_fuse(left: &[Letter], right: &[Letter]) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        for i in 0..=left.len() {
            for j in 0..=right.len() {
                let (a, g) = left.split_at(i);
                let (gb, b) = right.split_at(j);
                if g.len() == gb.len() && g.iter().rev().zip(gb).all(|(x, y)| x.conj() == *y) {
                    out.push([a, b].concat());
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn u_times_u_bar() {
        let d = word_fuse(&[U], &[UBar]);
        assert_eq!(d.multiplicity(&IrrepLabel::Word(vec![])), 1);
        assert_eq!(d.multiplicity(&IrrepLabel::Word(vec![U, UBar])), 1);
        assert_eq!(d.len(), 2);
        assert_eq!(word_fuse(&[U], &[U]), Decomposition::single(IrrepLabel::Word(vec![U, U])));
    }

    #[test]
    fn matches_brute_force_splittings() {
        let words: Vec<Vec<Letter>> = (0..16u32)
            .flat_map(|bits| {
                (0..=4usize).map(move |len| {
                    (0..len).map(|i| if bits >> i & 1 == 1 { UBar } else { U }).collect()
                })
            })
            .collect();
        for a in &words {
            for b in &words {
                let fast: Vec<Vec<Letter>> = word_fuse(a, b)
                    .labels()
                    .map(|l| match l {
                        IrrepLabel::Word(w) => w.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                let mut fast = fast;
                fast.sort();
                assert_eq!(fast, brute_force_fuse(a, b), "{a:?} (x) {b:?}");
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(word_dimension(3, &[]), Some(1));
        assert_eq!(word_dimension(3, &[U, U, U, U]), Some(81));
        assert_eq!(word_dimension(3, &[U, UBar]), Some(8));
        assert_eq!(word_dimension(3, &[U, UBar, U]), Some(21));
        assert_eq!(word_dimension(2, &[UBar, U]), Some(3));
        assert_eq!(word_dimension(u128::MAX, &[U, U]), None);
    }
}
