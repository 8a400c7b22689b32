//! Number backend, small complex matrices and the Hermitian eigensolver.

mod jacobi;
mod matrix;
mod quadratic;
mod scalar;

pub use jacobi::{eigenvalues_hermitian, eigenvalues_hermitian_with, JacobiOptions};
pub use matrix::{Complex, ComplexMatrix, HermitianMatrix, MAX_DIM};
pub use quadratic::solve_quadratic_positive;
pub use scalar::{BigFloat, Precision, Scalar};
