//! Exact rational scalars and the trait shared by all coefficient fields.
//!
//! `Rat` wraps an arbitrary-precision rational that is always stored reduced
//! with a positive denominator, so structural equality is canonical equality.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact rational. Always reduced, denominator >= 1,
/// sign carried by the numerator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Integer value, when the denominator is one.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer();
        let d = self.0.denom();
        // good enough for display/oracle purposes; exact paths never use this
        let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
        let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
        nf / df
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Parses "p" or "p/q" with optional sign, as used by every JSON schema here.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadScalar(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rat::from_bigint(n))
            }
            Some((num, den)) => {
                let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rat(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        Rat(self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

/// Common surface of the exact coefficient fields (Q and number fields).
///
/// Zero and one are derived from an existing element because number-field
/// elements carry their field; matrix and Lie-algebra code always has an
/// element in hand.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn s_add(&self, other: &Self) -> Self;
    fn s_sub(&self, other: &Self) -> Self;
    fn s_mul(&self, other: &Self) -> Self;
    fn s_neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn s_inv(&self) -> Option<Self>;
    /// The element as a rational, when it lies in the prime field.
    fn as_rational(&self) -> Option<Rat>;
    /// Embeds a rational into the field of `self`.
    fn from_rational_like(&self, r: &Rat) -> Self;
}

impl Scalar for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn s_add(&self, other: &Self) -> Self {
        self + other
    }
    fn s_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn s_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn s_neg(&self) -> Self {
        -self
    }
    fn s_inv(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn as_rational(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn from_rational_like(&self, r: &Rat) -> Self {
        r.clone()
    }
}

/// Convenience for building rationals in tests and builders.
pub fn rat(n: i64) -> Rat {
    Rat::from_int(n)
}

/// Convenience for fractional literals.
pub fn ratq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d)).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_sign_normalized() {
        let r = Rat::new(BigInt::from(4), BigInt::from(-6)).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r.to_string(), "-2/3");
    }

    #[test]
    fn zero_is_canonical() {
        let z = Rat::new(BigInt::from(0), BigInt::from(7)).unwrap();
        assert_eq!(z, Rat::zero());
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(rat(5).to_string(), "5");
        assert_eq!(ratq(5, 2).to_string(), "5/2");
        assert_eq!(ratq(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-7", "22/7", "-3/5"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn division_by_nonzero_recovers() {
        let a = ratq(7, 3);
        let b = ratq(-5, 11);
        let c = (&a * &b).clone() / b.clone();
        assert_eq!(c, a);
    }
}
