//! Power sums and Newton's identities.
//!
//! A multiset of `n` positive numbers is determined by `p_1, ..., p_n`
//! through the elementary symmetric values they generate, which gives a
//! finite decision procedure for multiset equality.

use crate::error::{Error, Result};
use crate::numerics::{Precision, Scalar};

/// `p_k = sum of v^k` for `k = 1..=count`.
pub fn power_sums(values: &[Scalar], count: usize) -> Vec<Scalar> {
    let mut powers: Vec<Scalar> = values.to_vec();
    let mut sums = Vec::with_capacity(count);
    for k in 1..=count {
        if k > 1 {
            for (p, v) in powers.iter_mut().zip(values) {
                *p = &*p * v;
            }
        }
        sums.push(powers.iter().sum());
    }
    sums
}

/// Elementary symmetric values `e_1, ..., e_n` from power sums `p_1, ..., p_n`,
/// using `k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i`.
pub fn newton_reconstruct(power_sums: &[Scalar], n: usize) -> Result<Vec<Scalar>> {
    if power_sums.len() != n {
        return Err(Error::LengthMismatch { expected: n, actual: power_sums.len() });
    }
    let mut e = Vec::with_capacity(n + 1);
    e.push(Scalar::one());
    for k in 1..=n {
        let mut acc = Scalar::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i - 1];
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc / Scalar::from_int(k as i64));
    }
    e.remove(0);
    Ok(e)
}

/// Decides whether two positive multisets coincide by comparing the
/// elementary symmetric values reconstructed from their first `max(|a|, |b|)`
/// power sums.
pub fn same_multiset_by_power_sums(a: &[Scalar], b: &[Scalar], prec: Precision) -> bool {
    let n = a.len().max(b.len());
    let ea = newton_reconstruct(&power_sums(a, n), n).expect("lengths agree");
    let eb = newton_reconstruct(&power_sums(b, n), n).expect("lengths agree");
    ea.iter().zip(&eb).all(|(x, y)| prec.close_relative(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn two_and_one() {
        let p = power_sums(&[s(2), s(1)], 2);
        assert_eq!(p, vec![s(3), s(5)]);
        assert_eq!(newton_reconstruct(&p, 2).unwrap(), vec![s(3), s(2)]);
    }

    #[test]
    fn ones_give_binomials() {
        for n in 1..=8usize {
            let e = newton_reconstruct(&vec![s(n as i64); n], n).unwrap();
            let mut binom = 1i64;
            for (k, ek) in e.iter().enumerate() {
                let k = k as i64 + 1;
                binom = binom * (n as i64 - k + 1) / k;
                assert_eq!(ek, &s(binom), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            newton_reconstruct(&[s(1)], 2),
            Err(Error::LengthMismatch { expected: 2, actual: 1 })
        ));
    }

    #[test]
    fn unequal_cardinalities_are_distinguished() {
        let prec = Precision::default();
        assert!(!same_multiset_by_power_sums(&[s(1), s(1)], &[s(1)], prec));
        assert!(same_multiset_by_power_sums(&[s(2), s(3)], &[s(3), s(2)], prec));
        assert!(!same_multiset_by_power_sums(&[s(1), s(4)], &[s(2), s(3)], prec));
    }
}
