use std::fmt;

use super::{Precision, Scalar};
use crate::error::{Error, Result};

/// Largest matrix the eigensolver accepts.
pub const MAX_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: Scalar,
    pub im: Scalar,
}

impl Complex {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        Self { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        Self { re, im: Scalar::zero() }
    }

    pub fn zero() -> Self {
        Self::real(Scalar::zero())
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn add(&self, other: &Complex) -> Complex {
        Complex::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn mul(&self, other: &Complex) -> Complex {
        Complex::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}{:+}i", self.re, self.im.to_f64())
        }
    }
}

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn from_rows(rows: Vec<Vec<Complex>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || dim > MAX_DIM || rows.iter().any(|r| r.len() != dim) {
            let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
            return Err(Error::MatrixShape { rows: dim, cols, max: MAX_DIM });
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_real_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Complex::real).collect())
                .collect(),
        )
    }

    pub fn diagonal(values: Vec<Scalar>) -> Result<Self> {
        let n = values.len();
        let mut rows = vec![vec![Complex::zero(); n]; n];
        for (i, v) in values.into_iter().enumerate() {
            rows[i][i] = Complex::real(v);
        }
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diagonal(vec![Scalar::one(); n])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Complex {
        &self.entries[row * self.dim + col]
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let n = self.dim;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).conj()).collect();
        ComplexMatrix { dim: n, entries }
    }

    pub fn transpose(&self) -> ComplexMatrix {
        let n = self.dim;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        ComplexMatrix { dim: n, entries }
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                entries.push(acc);
            }
        }
        ComplexMatrix { dim: n, entries }
    }

    /// `F* F`, which is Hermitian and positive semi-definite by construction.
    pub fn gram(&self) -> HermitianMatrix {
        HermitianMatrix { inner: self.adjoint().matmul(self) }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// `P M P^T` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ComplexMatrix {
        let n = self.dim;
        assert_eq!(perm.len(), n);
        let mut entries = vec![Complex::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] * n + perm[j]] = self.get(i, j).clone();
            }
        }
        ComplexMatrix { dim: n, entries }
    }
}

/// A complex matrix known to equal its own conjugate transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
}

impl HermitianMatrix {
    /// Validates conjugate symmetry: exactly for exact entries, within the
    /// precision's tolerance otherwise.
    pub fn new(m: ComplexMatrix, prec: Precision) -> Result<Self> {
        let tol = prec.tolerance();
        for i in 0..m.dim {
            for j in i..m.dim {
                let (a, b) = (m.get(i, j), m.get(j, i).conj());
                if !a.re.approx_eq(&b.re, &tol) || !a.im.approx_eq(&b.im, &tol) {
                    return Err(Error::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(Self { inner: m })
    }

    pub fn from_real_rows(rows: Vec<Vec<Scalar>>, prec: Precision) -> Result<Self> {
        Self::new(ComplexMatrix::from_real_rows(rows)?, prec)
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Complex {
        self.inner.get(row, col)
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim()).map(|i| self.get(i, i).re.clone()).sum()
    }

    pub fn permuted(&self, perm: &[usize]) -> HermitianMatrix {
        HermitianMatrix { inner: self.inner.permuted(perm) }
    }

    pub fn transpose(&self) -> HermitianMatrix {
        HermitianMatrix { inner: self.inner.transpose() }
    }
}
