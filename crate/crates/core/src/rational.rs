//! Arbitrary-precision rationals, the coefficient domain for every series and
//! Hopf element in this crate.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact fraction of arbitrary-precision integers, always reduced to lowest
/// terms with a positive denominator.
///
/// The canonical text form is `"p/q"`, or just `"p"` when the denominator is 1;
/// JSON encodes rationals as these strings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Build `numerator / denominator`, reduced. Fails on a zero denominator.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// True when the value is an integer (denominator 1).
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational(BigRational::from_integer(n.clone()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Division panics on a zero divisor, like integer division.
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::RationalParse(s.to_string());
        let mut parts = s.splitn(2, '/');
        let numer_str = parts.next().ok_or_else(bad)?.trim();
        let numer = BigInt::from_str(numer_str).map_err(|_| bad())?;
        match parts.next() {
            None => Ok(Rational::from(numer)),
            Some(denom_str) => {
                let denom = BigInt::from_str(denom_str.trim()).map_err(|_| bad())?;
                if denom.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Rational::new(numer, denom)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Evaluate `c_0 + c_1 x + ... + c_n x^n` by Horner's rule.
pub fn eval_polynomial(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r, rat("-3/2"));
        assert_eq!(rat("4/2"), rat("2"));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Rational::new(BigInt::from(1), BigInt::zero()),
            Err(Error::ZeroDenominator)
        );
        assert!(matches!("1/0".parse::<Rational>(), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(rat("5/1").to_string(), "5");
        assert_eq!(rat("0").to_string(), "0");
        assert_eq!(rat("7/3").to_string(), "7/3");
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&rat("1/2") + &rat("1/3"), rat("5/6"));
        assert_eq!(&rat("1/2") * &rat("2/3"), rat("1/3"));
        assert_eq!(&rat("1") - &rat("1/4"), rat("3/4"));
        assert_eq!(&rat("1/2") / &rat("1/4"), rat("2"));
        assert_eq!(-rat("2/5"), rat("-2/5"));
        assert_eq!(rat("2/3").pow(3), rat("8/27"));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let r = rat("-22/7");
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"-22/7\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let int: Rational = serde_json::from_str("\"3\"").unwrap();
        assert_eq!(int, rat("3"));
    }

    #[test]
    fn horner_evaluation() {
        // 1 + 2x + 3x^2 at x = 1/2 -> 1 + 1 + 3/4
        let coeffs = vec![rat("1"), rat("2"), rat("3")];
        assert_eq!(eval_polynomial(&coeffs, &rat("1/2")), rat("11/4"));
    }
}
