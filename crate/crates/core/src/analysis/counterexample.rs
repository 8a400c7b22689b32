use crate::error::{Error, Result};
use crate::numerics::{solve_quadratic_positive, ComplexMatrix, Precision, Scalar};
use crate::spectra::{RhoSpectrum, SymmetryVerdict};

/// `F = diag(y, x, x)` with `x > 0` chosen so that `Tr(F*F) = Tr((F*F)^-1)`.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub y: Scalar,
    pub x_squared: Scalar,
    pub x: Scalar,
    pub f: ComplexMatrix,
    /// `{y^2, x^2, x^2}`.
    pub spectrum: RhoSpectrum,
    pub trace: Scalar,
    pub inverse_trace: Scalar,
    /// `|2 s^2 + (y^2 - y^-2) s - 2|` at `s = x^2`.
    pub quadratic_residual: Scalar,
    pub symmetry: SymmetryVerdict,
}

impl Counterexample {
    pub fn trace_gap(&self) -> Scalar {
        (&self.trace - &self.inverse_trace).abs()
    }
}

/// `x^2` is the positive root of `2 s^2 + (y^2 - y^-2) s - 2 = 0`, i.e.
/// `2 / x^2 + 1 / y^2 = 2 x^2 + y^2`.
pub fn build_counterexample(y: &Scalar, prec: Precision) -> Result<Counterexample> {
    if *y <= Scalar::one() {
        return Err(Error::InvalidArgument(format!("y must be greater than 1, got {y}")));
    }
    let y2 = y.powi(2);
    let (a, b, c) = (Scalar::from_int(2), &y2 - y2.recip(), Scalar::from_int(-2));
    let s = solve_quadratic_positive(&a, &b, &c, prec)?;
    let quadratic_residual = (&a * s.powi(2) + &b * &s + &c).abs();
    let x = s.sqrt(prec);
    let f = ComplexMatrix::diagonal(vec![y.clone(), x.clone(), x.clone()])?;
    let spectrum = RhoSpectrum::new(vec![y2, s.clone(), s.clone()], prec)?;
    let symmetry = spectrum.is_symmetric(prec);
    debug_assert!(!symmetry.symmetric, "y > 1 never yields a symmetric spectrum");
    Ok(Counterexample {
        y: y.clone(),
        x_squared: s,
        x,
        f,
        trace: spectrum.trace(),
        inverse_trace: spectrum.inverse_trace(),
        spectrum,
        quadratic_residual,
        symmetry,
    })
}
