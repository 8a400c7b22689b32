use super::RhoSpectrum;
use crate::error::{Error, Result};
use crate::numerics::{eigenvalues_hermitian, ComplexMatrix, Precision, Scalar};

/// Spectrum of `(F* F)^T`, the rho operator of the fundamental
/// representation of the free quantum group built from `F`.
///
/// If `Tr(F*F) != Tr((F*F)^-1)` and `auto_normalize` is set, the spectrum is
/// rescaled by `sqrt(Tr((F*F)^-1) / Tr(F*F))`, which restores the trace
/// condition; otherwise the mismatch is an error.
pub fn rho_from_f(f: &ComplexMatrix, auto_normalize: bool, prec: Precision) -> Result<RhoSpectrum> {
    // Transposition does not change the spectrum.
    let eigenvalues = eigenvalues_hermitian(&f.gram(), prec)?;
    let smallest = eigenvalues.last().cloned().unwrap_or_else(Scalar::zero);
    if smallest <= prec.tolerance() {
        return Err(Error::SingularMatrix { smallest });
    }
    let spectrum = RhoSpectrum::new(eigenvalues, prec)?;
    if spectrum.is_normalized() {
        return Ok(spectrum);
    }
    let (trace, inverse_trace) = (spectrum.trace(), spectrum.inverse_trace());
    if !auto_normalize {
        return Err(Error::TraceCondition { trace, inverse_trace });
    }
    let factor = (inverse_trace / trace).sqrt(prec);
    spectrum.scaled(&factor, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{solve_quadratic_positive, Complex};

    fn p() -> Precision {
        Precision::default()
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn su_half_two() {
        let f = ComplexMatrix::from_real_rows(vec![vec![s(0), s(1)], vec![s(-2), s(0)]]).unwrap();
        let rho = rho_from_f(&f, true, p()).unwrap();
        assert_eq!(rho.eigenvalues(), &[s(2), Scalar::ratio(1, 2)]);
        assert!(rho.is_normalized());
        match rho_from_f(&f, false, p()).unwrap_err() {
            Error::TraceCondition { trace, inverse_trace } => {
                assert_eq!(trace, s(5));
                assert_eq!(inverse_trace, Scalar::ratio(5, 4));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identity_is_kac() {
        let rho = rho_from_f(&ComplexMatrix::identity(4).unwrap(), false, p()).unwrap();
        assert_eq!(rho, RhoSpectrum::kac(4));
    }

    #[test]
    fn counterexample_family_is_already_normalized() {
        let y = s(2);
        let b = &y * &y - (&y * &y).recip();
        let x_sqr = solve_quadratic_positive(&s(2), &b, &s(-2), p()).unwrap();
        let x = x_sqr.sqrt(p());
        let f = ComplexMatrix::diagonal(vec![y, x.clone(), x]).unwrap();
        let rho = rho_from_f(&f, false, p()).unwrap();
        assert!(rho.is_normalized());
        assert_eq!(rho.eigenvalues()[0], s(4));
        let trace_oracle = Scalar::parse("4.8664640249326636020685089620159454562714992572815").unwrap();
        assert!(rho.trace().approx_eq(&trace_oracle, &Scalar::pow10(-45)));
    }

    #[test]
    fn non_diagonal_complex_f() {
        // F = [[1, i], [0, 1]]: F*F = [[1, i], [-i, 2]], eigenvalues (3 +- sqrt 5) / 2,
        // whose product is 1 and therefore already satisfy Tr = Tr^-1.
        let f = ComplexMatrix::from_rows(vec![
            vec![Complex::real(s(1)), Complex::new(s(0), s(1))],
            vec![Complex::zero(), Complex::real(s(1))],
        ])
        .unwrap();
        let rho = rho_from_f(&f, false, p()).unwrap();
        let root5 = s(5).sqrt(p());
        let tol = p().residual_bound(10);
        assert!(rho.eigenvalues()[0].approx_eq(&((s(3) + &root5) / s(2)), &tol));
        assert!(rho.eigenvalues()[1].approx_eq(&((s(3) - &root5) / s(2)), &tol));
    }

    #[test]
    fn singular_f_rejected() {
        let f = ComplexMatrix::diagonal(vec![s(1), s(0)]).unwrap();
        assert!(matches!(rho_from_f(&f, true, p()), Err(Error::SingularMatrix { .. })));
    }
}
