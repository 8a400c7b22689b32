use super::{Precision, Scalar};
use crate::error::{Error, Result};

/// The unique positive root of `a s^2 + b s + c` with `a > 0`.
///
/// A double positive root counts as one root. The root is exact whenever
/// the coefficients are rational and the discriminant is a rational square.
pub fn solve_quadratic_positive(a: &Scalar, b: &Scalar, c: &Scalar, prec: Precision) -> Result<Scalar> {
    if !a.is_positive() {
        return Err(Error::InvalidArgument(format!("leading coefficient must be positive, got {a}")));
    }
    let disc = b * b - Scalar::from_int(4) * a * c;
    if disc.is_negative() {
        return Err(Error::NoPositiveRoot { reason: format!("discriminant {disc} is negative") });
    }
    let root_disc = disc.sqrt(prec);
    let two_a = Scalar::from_int(2) * a;

    // Roots have product c/a and sum -b/a.
    if c.is_negative() {
        // One positive and one negative root; avoid cancellation in -b + sqrt(disc).
        return Ok(if b.is_positive() {
            (Scalar::from_int(2) * c) / (-b - &root_disc)
        } else {
            (&root_disc - b) / &two_a
        });
    }
    if c.is_zero() {
        return if b.is_negative() {
            Ok(-b / a)
        } else {
            Err(Error::NoPositiveRoot { reason: "roots are 0 and a non-positive value".into() })
        };
    }
    if !b.is_negative() {
        return Err(Error::NoPositiveRoot { reason: "both roots are negative".into() });
    }
    if disc.is_zero() {
        return Ok(-b / &two_a);
    }
    let larger = (&root_disc - b) / &two_a;
    let smaller = c / (a * &larger);
    Err(Error::TwoPositiveRoots { smaller, larger })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    fn residual(a: &Scalar, b: &Scalar, c: &Scalar, s: &Scalar) -> Scalar {
        (a * s * s + b * s + c).abs()
    }

    #[test]
    fn counterexample_quadratic_for_y_two() {
        let (a, b, c) = (Scalar::from_int(2), Scalar::parse("3.75").unwrap(), Scalar::from_int(-2));
        let s = solve_quadratic_positive(&a, &b, &c, p()).unwrap();
        assert!(residual(&a, &b, &c, &s) < p().residual_bound(10));
        // (-3.75 + sqrt(30.0625)) / 4, evaluated independently at 50 digits
        let oracle = Scalar::parse("0.43323201246633180103425448100797272813574962864077").unwrap();
        assert!(s.approx_eq(&oracle, &Scalar::pow10(-45)));
    }

    #[test]
    fn perfect_square_is_exact() {
        let s = solve_quadratic_positive(&Scalar::one(), &Scalar::zero(), &Scalar::from_int(-4), p()).unwrap();
        assert_eq!(s, Scalar::from_int(2));
        assert!(s.is_exact());
    }

    #[test]
    fn two_positive_roots_rejected() {
        let err = solve_quadratic_positive(&Scalar::one(), &Scalar::from_int(-3), &Scalar::from_int(2), p())
            .unwrap_err();
        match err {
            Error::TwoPositiveRoots { smaller, larger } => {
                assert_eq!(smaller, Scalar::one());
                assert_eq!(larger, Scalar::from_int(2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn other_root_configurations() {
        let one = Scalar::one();
        // s^2 + 1: complex roots
        assert!(matches!(
            solve_quadratic_positive(&one, &Scalar::zero(), &one, p()),
            Err(Error::NoPositiveRoot { .. })
        ));
        // s^2 + 3s + 2: roots -1, -2
        assert!(solve_quadratic_positive(&one, &Scalar::from_int(3), &Scalar::from_int(2), p()).is_err());
        // s^2 - 2s: roots 0, 2
        assert_eq!(
            solve_quadratic_positive(&one, &Scalar::from_int(-2), &Scalar::zero(), p()).unwrap(),
            Scalar::from_int(2)
        );
        // (s - 1)^2: a double root counts once
        assert_eq!(
            solve_quadratic_positive(&one, &Scalar::from_int(-2), &one, p()).unwrap(),
            one
        );
        assert!(solve_quadratic_positive(&Scalar::zero(), &one, &one, p()).is_err());
    }
}
