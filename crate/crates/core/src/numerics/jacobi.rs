//! Cyclic Jacobi eigenvalue iteration for small Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then zeroes it with a real plane rotation. Only eigenvalues are
//! produced; the rotations are not accumulated.

use super::scalar::BigFloat;
use super::{HermitianMatrix, Precision, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct JacobiOptions {
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self { max_sweeps: 100 }
    }
}

/// Eigenvalues of `m` in descending order.
///
/// A diagonal input is read off directly, so exact diagonal entries stay
/// exact. Otherwise the iteration runs until the off-diagonal Frobenius norm
/// drops below `10^(-P+5) * max(1, ||m||_F)`.
pub fn eigenvalues_hermitian(m: &HermitianMatrix, prec: Precision) -> Result<Vec<Scalar>> {
    eigenvalues_hermitian_with(m, prec, JacobiOptions::default())
}

pub fn eigenvalues_hermitian_with(
    m: &HermitianMatrix,
    prec: Precision,
    opts: JacobiOptions,
) -> Result<Vec<Scalar>> {
    let n = m.dim();
    if m.as_matrix().is_diagonal() {
        let mut values: Vec<Scalar> = (0..n).map(|i| m.get(i, i).re.clone()).collect();
        values.sort_by(|a, b| b.cmp(a));
        return Ok(values);
    }

    let mut work = Work::new(m, prec);
    let frob_sqr = work.frobenius_sqr();
    let one = Scalar::one().to_float(prec);
    let scale = if frob_sqr > one { frob_sqr } else { one };
    let bound = prec.residual_bound(5).to_float(prec);
    let threshold_sqr = &bound * &bound * scale;

    for sweep in 0..=opts.max_sweeps {
        let off = work.off_diagonal_sqr();
        if off < threshold_sqr {
            return Ok(work.sorted_diagonal());
        }
        if sweep == opts.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps: opts.max_sweeps,
                off_norm: Scalar::Float(off.sqrt()),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                work.rotate(p, q);
            }
        }
    }
    unreachable!("loop returns on its last iteration")
}

struct Work {
    n: usize,
    re: Vec<BigFloat>,
    im: Vec<BigFloat>,
}

impl Work {
    fn new(m: &HermitianMatrix, prec: Precision) -> Self {
        let n = m.dim();
        let mut re = Vec::with_capacity(n * n);
        let mut im = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let z = m.get(i, j);
                re.push(z.re.to_float(prec));
                im.push(z.im.to_float(prec));
            }
        }
        Self { n, re, im }
    }

    fn at(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    fn frobenius_sqr(&self) -> BigFloat {
        self.re
            .iter()
            .zip(&self.im)
            .fold(BigFloat::ZERO, |acc, (x, y)| acc + x * x + y * y)
    }

    fn off_diagonal_sqr(&self) -> BigFloat {
        let mut acc = BigFloat::ZERO;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let k = self.at(i, j);
                    acc += &self.re[k] * &self.re[k] + &self.im[k] * &self.im[k];
                }
            }
        }
        acc
    }

    fn set(&mut self, i: usize, j: usize, re: BigFloat, im: BigFloat) {
        let (ij, ji) = (self.at(i, j), self.at(j, i));
        self.re[ji] = re.clone();
        self.im[ji] = -im.clone();
        self.re[ij] = re;
        self.im[ij] = im;
    }

    fn rotate(&mut self, p: usize, q: usize) {
        let pq = self.at(p, q);
        let r_sqr = &self.re[pq] * &self.re[pq] + &self.im[pq] * &self.im[pq];
        if r_sqr.repr().significand().is_zero() {
            return;
        }
        let r = r_sqr.sqrt();

        // Multiply column q by e^{-i phi} (and row q by e^{i phi}) so that a_pq = r.
        let positive_real = self.im[pq].repr().significand().is_zero()
            && self.re[pq].sign() == dashu::base::Sign::Positive;
        if !positive_real {
            let cr = &self.re[pq] / &r;
            let ci = &self.im[pq] / &r;
            for k in 0..self.n {
                if k == q {
                    continue;
                }
                let kq = self.at(k, q);
                let (x, y) = (self.re[kq].clone(), self.im[kq].clone());
                let new_re = &x * &cr + &y * &ci;
                let new_im = &y * &cr - &x * &ci;
                self.set(k, q, new_re, new_im);
            }
        }

        let app = self.re[self.at(p, p)].clone();
        let aqq = self.re[self.at(q, q)].clone();
        let theta = (&aqq - &app) / (&r * BigFloat::from(2));
        let one = BigFloat::ONE;
        let root = (&theta * &theta + &one).sqrt();
        let t = if theta.sign() == dashu::base::Sign::Negative {
            -(&one / (&root - &theta))
        } else {
            &one / (&theta + &root)
        };
        let c = &one / (&t * &t + &one).sqrt();
        let s = &t * &c;

        for k in 0..self.n {
            if k == p || k == q {
                continue;
            }
            let (kp, kq) = (self.at(k, p), self.at(k, q));
            let (xr, xi) = (self.re[kp].clone(), self.im[kp].clone());
            let (yr, yi) = (self.re[kq].clone(), self.im[kq].clone());
            self.set(k, p, &c * &xr - &s * &yr, &c * &xi - &s * &yi);
            self.set(k, q, &s * &xr + &c * &yr, &s * &xi + &c * &yi);
        }
        let shift = &t * &r;
        let (pp, qq) = (self.at(p, p), self.at(q, q));
        self.re[pp] = &app - &shift;
        self.re[qq] = &aqq + &shift;
        self.set(p, q, BigFloat::ZERO, BigFloat::ZERO);
    }

    fn sorted_diagonal(&self) -> Vec<Scalar> {
        let mut values: Vec<Scalar> =
            (0..self.n).map(|i| Scalar::Float(self.re[self.at(i, i)].clone())).collect();
        values.sort_by(|a, b| b.cmp(a));
        values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{Complex, ComplexMatrix};

    fn p() -> Precision {
        Precision::default()
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn herm(rows: Vec<Vec<i64>>) -> HermitianMatrix {
        let rows = rows.into_iter().map(|r| r.into_iter().map(s).collect()).collect();
        HermitianMatrix::from_real_rows(rows, p()).unwrap()
    }

    #[test]
    fn diagonal_input_is_exact() {
        let ev = eigenvalues_hermitian(&herm(vec![vec![1, 0], vec![0, 4]]), p()).unwrap();
        assert_eq!(ev, vec![s(4), s(1)]);
        assert!(ev.iter().all(Scalar::is_exact));
    }

    #[test]
    fn identity() {
        let id = HermitianMatrix::new(ComplexMatrix::identity(3).unwrap(), p()).unwrap();
        assert_eq!(eigenvalues_hermitian(&id, p()).unwrap(), vec![s(1); 3]);
    }

    #[test]
    fn two_by_two_symmetric() {
        // characteristic polynomial l^2 - 4 l + 3 = (l - 3)(l - 1)
        let ev = eigenvalues_hermitian(&herm(vec![vec![2, 1], vec![1, 2]]), p()).unwrap();
        let tol = p().residual_bound(10);
        assert!(ev[0].approx_eq(&s(3), &tol));
        assert!(ev[1].approx_eq(&s(1), &tol));
        for l in &ev {
            let char_poly = l * l - s(4) * l + s(3);
            assert!(char_poly.approx_eq(&Scalar::zero(), &tol));
        }
    }

    #[test]
    fn negative_pivot() {
        // [[1, -2], [-2, 1]] has eigenvalues 3 and -1.
        let ev = eigenvalues_hermitian(&herm(vec![vec![1, -2], vec![-2, 1]]), p()).unwrap();
        let tol = p().residual_bound(10);
        assert!(ev[0].approx_eq(&s(3), &tol), "{}", ev[0]);
        assert!(ev[1].approx_eq(&s(-1), &tol), "{}", ev[1]);
    }

    #[test]
    fn complex_hermitian() {
        // [[2, i], [-i, 2]] has eigenvalues 3 and 1.
        let m = ComplexMatrix::from_rows(vec![
            vec![Complex::real(s(2)), Complex::new(s(0), s(1))],
            vec![Complex::new(s(0), s(-1)), Complex::real(s(2))],
        ])
        .unwrap();
        let ev = eigenvalues_hermitian(&HermitianMatrix::new(m, p()).unwrap(), p()).unwrap();
        let tol = p().residual_bound(10);
        assert!(ev[0].approx_eq(&s(3), &tol));
        assert!(ev[1].approx_eq(&s(1), &tol));
    }

    #[test]
    fn sweep_limit_is_reported() {
        let m = herm(vec![vec![1, 2, 3], vec![2, 5, 6], vec![3, 6, 9]]);
        let err = eigenvalues_hermitian_with(&m, p(), JacobiOptions { max_sweeps: 0 }).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { sweeps: 0, .. }));
    }
}
