//! The number backend: exact rationals that fall back to binary
//! arbitrary-precision floats as soon as an operation leaves the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu::base::{Abs, SquareRoot, UnsignedAbs};
use dashu::float::round::mode::HalfEven;
use dashu::float::{DBig, FBig};
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use crate::error::{Error, Result};

/// Binary float used for every inexact value.
pub type BigFloat = FBig<HalfEven, 2>;

/// Largest root index tried when evaluating a rational exponent `p/q` as
/// `(x^(1/q))^p` instead of through `exp(t ln x)`.
const MAX_ROOT_DENOMINATOR: u64 = 64;

/// Working precision, expressed in significant decimal digits.
///
/// Floats carry a few guard digits beyond `digits` so that results reported
/// at `digits` are correct to the last place after a chain of operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision {
    digits: usize,
}

impl Precision {
    pub const DEFAULT_DIGITS: usize = 60;
    pub const GUARD_DIGITS: usize = 12;
    pub const MIN_DIGITS: usize = 8;

    pub fn new(digits: usize) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least {} digits, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        Ok(Self { digits })
    }

    pub fn digits(self) -> usize {
        self.digits
    }

    /// Mantissa length in bits for floats created at this precision.
    pub fn bits(self) -> usize {
        let digits = (self.digits + Self::GUARD_DIGITS) as f64;
        (digits * std::f64::consts::LOG2_10).ceil() as usize
    }

    /// Comparison tolerance `10^(-floor(P/2))`, exact.
    pub fn tolerance(self) -> Scalar {
        Scalar::pow10(-((self.digits / 2) as i64))
    }

    /// `10^(-P + slack)`, the bound used for residual checks.
    pub fn residual_bound(self, slack: usize) -> Scalar {
        Scalar::pow10(slack as i64 - self.digits as i64)
    }

    /// `|a - b| <= tol * max(1, |a|)`: the tie rule for eigenvalues.
    pub fn ties(self, a: &Scalar, b: &Scalar) -> bool {
        if a.is_exact() && b.is_exact() {
            return a == b;
        }
        let scale = a.abs().max(Scalar::one());
        (a - b).abs() <= self.tolerance() * scale
    }

    /// Relative comparison used for quantities that can be far from 1.
    pub fn close_relative(self, a: &Scalar, b: &Scalar) -> bool {
        if a.is_exact() && b.is_exact() {
            return a == b;
        }
        let scale = a.abs().max(b.abs()).max(Scalar::one());
        (a - b).abs() <= self.tolerance() * scale
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self { digits: Self::DEFAULT_DIGITS }
    }
}

/// A real number that is either an exact rational or a binary float.
///
/// Arithmetic between two exact values stays exact. Mixing an exact value
/// with a float rounds the exact operand to the float's precision.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(RBig),
    Float(BigFloat),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(RBig::ZERO)
    }

    pub fn one() -> Self {
        Scalar::Exact(RBig::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(RBig::from(n))
    }

    pub fn from_u128(n: u128) -> Self {
        Scalar::Exact(RBig::from(n))
    }

    /// `num / den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(RBig::from_parts_signed(IBig::from(num), IBig::from(den)))
    }

    /// Exact `10^k`.
    pub fn pow10(k: i64) -> Self {
        let p = UBig::from(10u8).pow(k.unsigned_abs() as usize);
        if k >= 0 {
            Scalar::Exact(RBig::from(p))
        } else {
            Scalar::Exact(RBig::from_parts(IBig::ONE, p))
        }
    }

    /// Parses `"3"`, `"-1.25"`, `"2.5e-3"` or `"7/4"` into an exact value.
    pub fn parse(src: &str) -> Result<Self> {
        let s = src.trim();
        let parsed = if s.contains('/') {
            RBig::from_str(s)
        } else {
            RBig::from_str_decimal(s)
        };
        parsed
            .map(Scalar::Exact)
            .map_err(|_| Error::InvalidArgument(format!("not a number: {src:?}")))
    }

    pub fn from_f64(x: f64) -> Option<Self> {
        RBig::try_from(x).ok().map(Scalar::Exact)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(f) => f.repr().significand().is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn signum(&self) -> i32 {
        match self.cmp(&Scalar::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Returns the exact integer value if this is an exact integer.
    pub fn as_integer(&self) -> Option<IBig> {
        match self {
            Scalar::Exact(r) if r.is_int() => Some(r.numerator().clone()),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&RBig> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.clone().abs()),
            Scalar::Float(f) => Scalar::Float(f.clone().abs()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().value(),
            Scalar::Float(f) => f.to_f64().value(),
        }
    }

    /// The value as a float with `prec.bits()` of mantissa.
    pub fn to_float(&self, prec: Precision) -> BigFloat {
        match self {
            Scalar::Exact(r) => rational_to_float(r, prec.bits()),
            Scalar::Float(f) if f.precision() >= prec.bits() => f.clone(),
            Scalar::Float(f) => f.clone().with_precision(prec.bits()).value(),
        }
    }

    /// Exact `self^n`; zero to a negative power panics.
    pub fn powi(&self, n: i64) -> Scalar {
        match self {
            Scalar::Exact(r) => {
                let p = r.pow(n.unsigned_abs() as isize);
                if n < 0 {
                    Scalar::Exact(RBig::ONE / p)
                } else {
                    Scalar::Exact(p)
                }
            }
            Scalar::Float(_) if n == 0 => Scalar::one(),
            Scalar::Float(f) => Scalar::Float(f.powi(IBig::from(n))),
        }
    }

    /// Square root of a non-negative value; exact when the input is the
    /// square of a rational.
    ///
    /// # Panics
    /// If `self` is negative.
    pub fn sqrt(&self, prec: Precision) -> Scalar {
        self.nth_root(2, prec)
    }

    /// `self^(1/n)` for non-negative `self`, exact for perfect powers.
    pub fn nth_root(&self, n: usize, prec: Precision) -> Scalar {
        assert!(n > 0, "root index must be positive");
        assert!(!self.is_negative(), "root of a negative number");
        if self.is_zero() || n == 1 {
            return self.clone();
        }
        if let Scalar::Exact(r) = self {
            if let Some(root) = exact_root(r, n) {
                return Scalar::Exact(root);
            }
        }
        let x = self.to_float(prec);
        Scalar::Float(if n == 2 { x.sqrt() } else { x.nth_root(n) })
    }

    pub fn ln(&self, prec: Precision) -> Scalar {
        assert!(self.is_positive(), "logarithm of a non-positive number");
        if self == &Scalar::one() {
            return Scalar::zero();
        }
        Scalar::Float(self.to_float(prec).ln())
    }

    pub fn exp(&self, prec: Precision) -> Scalar {
        if self.is_zero() {
            return Scalar::one();
        }
        Scalar::Float(self.to_float(prec).exp())
    }

    /// `self^t` for a positive base (any base when `t` is an exact integer).
    ///
    /// Exact integer exponents go through [`Scalar::powi`]; exact rational
    /// exponents `p/q` with small `q` through roots; everything else through
    /// `exp(t ln self)`.
    pub fn powf(&self, t: &Scalar, prec: Precision) -> Scalar {
        if let Some(n) = t.as_integer() {
            if let Ok(n) = i64::try_from(n) {
                return self.powi(n);
            }
        }
        assert!(self.is_positive(), "real power of a non-positive number");
        if self == &Scalar::one() {
            return Scalar::one();
        }
        if let Scalar::Exact(r) = t {
            if let (Ok(p), Ok(q)) = (i64::try_from(r.numerator()), u64::try_from(r.denominator())) {
                if q <= MAX_ROOT_DENOMINATOR {
                    return self.nth_root(q as usize, prec).powi(p);
                }
            }
        }
        let x = self.to_float(prec);
        let t = t.to_float(prec);
        Scalar::Float((x.ln() * t).exp())
    }

    pub fn recip(&self) -> Scalar {
        Scalar::one() / self
    }

    /// `|self - other| <= tol`, or exact equality when both sides are exact.
    pub fn approx_eq(&self, other: &Scalar, tol: &Scalar) -> bool {
        if self.is_exact() && other.is_exact() {
            return self == other;
        }
        (self - other).abs() <= *tol
    }

    /// Decimal rendering with at most `digits` significant digits.
    ///
    /// Exact values with a terminating expansion of at most `digits`
    /// significant digits are printed exactly; everything else is rounded.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if let Scalar::Exact(r) = self {
            if let Some(s) = terminating_decimal(r, digits) {
                return s;
            }
        }
        let f = match self {
            Scalar::Exact(r) => rational_to_float(r, Precision { digits }.bits()),
            Scalar::Float(f) => f.clone(),
        };
        if f.repr().significand().is_zero() {
            return "0".to_string();
        }
        let d: DBig = f.to_decimal().value().with_precision(digits).value();
        d.to_string()
    }
}

fn rational_to_float(r: &RBig, bits: usize) -> BigFloat {
    if r.is_zero() {
        return BigFloat::ZERO.with_precision(bits).value();
    }
    r.to_float::<HalfEven, 2>(bits).value()
}

fn exact_root(r: &RBig, n: usize) -> Option<RBig> {
    if r.numerator().sign() == dashu::base::Sign::Negative {
        return None;
    }
    let num = UBig::try_from(r.numerator().clone()).ok()?;
    let den = r.denominator().clone();
    let root_of = |x: &UBig| -> Option<UBig> {
        let y = if n == 2 { x.sqrt() } else { x.nth_root(n) };
        (y.pow(n) == *x).then_some(y)
    };
    Some(RBig::from_parts(IBig::from(root_of(&num)?), root_of(&den)?))
}

fn terminating_decimal(r: &RBig, digits: usize) -> Option<String> {
    let mut den = r.denominator().clone();
    let (two, five) = (UBig::from(2u8), UBig::from(5u8));
    let mut twos = 0usize;
    let mut fives = 0usize;
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return None;
    }
    let scale = twos.max(fives);
    let scaled = r.numerator() * IBig::from(UBig::from(10u8).pow(scale)) / IBig::from(r.denominator().clone());
    let negative = scaled.sign() == dashu::base::Sign::Negative;
    let body = scaled.unsigned_abs().to_string();
    let significant = body.trim_start_matches('0').trim_end_matches('0').len();
    if significant > digits {
        return None;
    }
    let text = if scale == 0 {
        body
    } else if body.len() > scale {
        let (int, frac) = body.split_at(body.len() - scale);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{body}", "0".repeat(scale - body.len()))
    };
    Some(if negative { format!("-{text}") } else { text })
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            (Scalar::Float(a), Scalar::Float(b)) => a.repr().cmp(b.repr()),
            (Scalar::Exact(a), Scalar::Float(b)) => a.cmp(&float_to_rational(b)),
            (Scalar::Float(a), Scalar::Exact(b)) => float_to_rational(a).cmp(b),
        }
    }
}

fn float_to_rational(f: &BigFloat) -> RBig {
    RBig::try_from(f.clone()).expect("finite float")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) if r.is_int() => write!(f, "{}", r.numerator()),
            Scalar::Exact(r) => match terminating_decimal(r, Precision::DEFAULT_DIGITS) {
                Some(s) => f.write_str(&s),
                None => write!(f, "{}/{}", r.numerator(), r.denominator()),
            },
            Scalar::Float(_) => f.write_str(&self.to_decimal_string(Precision::DEFAULT_DIGITS)),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<RBig> for Scalar {
    fn from(r: RBig) -> Self {
        Scalar::Exact(r)
    }
}

impl From<BigFloat> for Scalar {
    fn from(f: BigFloat) -> Self {
        Scalar::Float(f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse(s)
    }
}

fn widen(exact: &RBig, float: &BigFloat) -> BigFloat {
    // Precision 0 marks an unlimited-precision float such as a bare constant.
    let bits = match float.precision() {
        0 => Precision::default().bits(),
        p => p,
    };
    rational_to_float(exact, bits)
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    (Scalar::Exact(a), Scalar::Float(b)) => Scalar::Float(widen(a, b) $op b),
                    (Scalar::Float(a), Scalar::Exact(b)) => Scalar::Float(a $op widen(b, a)),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }

        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binary_op!(Add, add, +);
binary_op!(Sub, sub, -);
binary_op!(Mul, mul, *);
binary_op!(Div, div, /);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}
