//! Exact probabilities.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A reduced fraction with positive denominator. Displays as `a/b`, always
/// with the denominator, so `1` is written `1/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn ratio(num: usize, den: usize) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}`", self.0)
    }
}

impl core::error::Error for ParseRationalError {}

/// Accepts `a/b` or a bare integer `a`.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(String::from(s));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_always_has_denominator() {
        assert_eq!(Rational::ratio(6, 8).to_string(), "3/4");
        assert_eq!(Rational::one().to_string(), "1/1");
        assert_eq!(Rational::new(-2, 4).to_string(), "-1/2");
    }

    #[test]
    fn parse() {
        assert_eq!("3/4".parse::<Rational>().unwrap(), Rational::ratio(3, 4));
        assert_eq!("6/8".parse::<Rational>().unwrap(), Rational::ratio(3, 4));
        assert_eq!("2".parse::<Rational>().unwrap(), Rational::integer(2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Rational::ratio(1, 2);
        let b = Rational::ratio(1, 3);
        assert_eq!(&a + &b, Rational::ratio(5, 6));
        assert_eq!(&a - &b, Rational::ratio(1, 6));
        assert_eq!(&a * &b, Rational::ratio(1, 6));
        assert_eq!(&a / &b, Rational::ratio(3, 2));
        assert!(b < a);
        assert_eq!([a, b].into_iter().sum::<Rational>(), Rational::ratio(5, 6));
    }
}
