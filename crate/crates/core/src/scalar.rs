use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Default comparison/pivot tolerance in Float mode. Rational mode never
/// uses a tolerance: every comparison there is exact.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-9;

/// Arithmetic mode shared by all entries of a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Rational,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Rational => write!(f, "rational"),
            Mode::Float => write!(f, "float"),
        }
    }
}

/// A single matrix entry: an arbitrary-precision fraction (always reduced,
/// positive denominator — `BigRational` maintains that canonical form) or a
/// 64-bit float.
///
/// Binary operations require both operands in the same mode. The matrix
/// layer rejects mixed-mode data up front with a proper error; by the time
/// two scalars meet here a mix is a bug, so it panics.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Rational(_) => Mode::Rational,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn zero(mode: Mode) -> Scalar {
        match mode {
            Mode::Rational => Scalar::Rational(BigRational::zero()),
            Mode::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(mode: Mode) -> Scalar {
        match mode {
            Mode::Rational => Scalar::Rational(BigRational::one()),
            Mode::Float => Scalar::Float(1.0),
        }
    }

    pub fn from_int(mode: Mode, v: i64) -> Scalar {
        match mode {
            Mode::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Mode::Float => Scalar::Float(v as f64),
        }
    }

    /// Exact fraction p/q. Panics if q == 0 (callers validate first).
    pub fn ratio(p: i64, q: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a + b),
            _ => panic!("mixed-mode scalar arithmetic"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a - b),
            _ => panic!("mixed-mode scalar arithmetic"),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a * b),
            _ => panic!("mixed-mode scalar arithmetic"),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a / b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a / b),
            _ => panic!("mixed-mode scalar arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Float(a) => Scalar::Float(-a),
        }
    }

    /// Exact zero test in Rational mode; |x| <= tol (default 1e-9) in Float.
    pub fn is_zero_with(&self, tol: Option<f64>) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Float(a) => a.abs() <= tol.unwrap_or(DEFAULT_FLOAT_TOL),
        }
    }

    /// Magnitude for float pivot selection; exact value mapped through f64
    /// for rationals (only ever used for *ordering* pivots, never to decide
    /// rational zeroness).
    pub fn abs_f64(&self) -> f64 {
        match self {
            Scalar::Rational(a) => a.to_f64().map(f64::abs).unwrap_or(f64::INFINITY),
            Scalar::Float(a) => a.abs(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => write!(f, "{a}"),
            Scalar::Float(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_exact_and_reduced() {
        let a = Scalar::ratio(2, 4);
        let b = Scalar::ratio(1, 2);
        assert_eq!(a, b);
        let third = Scalar::ratio(1, 3);
        let sum = third.add(&third).add(&third);
        assert_eq!(sum, Scalar::one(Mode::Rational));
    }

    #[test]
    fn denominator_is_positive() {
        match Scalar::ratio(1, -2) {
            Scalar::Rational(r) => {
                assert!(r.denom() > &BigInt::from(0));
                assert_eq!(r, BigRational::new(BigInt::from(-1), BigInt::from(2)));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn float_zero_uses_tolerance() {
        assert!(Scalar::Float(1e-12).is_zero_with(None));
        assert!(!Scalar::Float(1e-6).is_zero_with(None));
        assert!(Scalar::Float(1e-6).is_zero_with(Some(1e-3)));
    }

    #[test]
    #[should_panic(expected = "mixed-mode")]
    fn mixed_mode_scalar_arithmetic_panics() {
        let _ = Scalar::one(Mode::Rational).add(&Scalar::one(Mode::Float));
    }
}
