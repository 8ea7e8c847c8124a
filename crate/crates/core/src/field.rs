//! Coefficient fields.
//!
//! Everything runs over [`Rational`] by default. [`Fp`] is a small prime
//! field for quick experiments; it is never used by the acceptance checks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub trait Field:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Image of a rational number, `None` if the denominator vanishes.
    fn from_rational(q: &Rational) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
            .expect("integers always map into a field")
    }

    /// Used only for display, so that `-2*x` prints instead of `+ -2*x`.
    fn is_negative(&self) -> bool {
        false
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        self.recip()
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Integers modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Add<&Fp<P>> for Fp<P> {
    type Output = Self;
    fn add(self, rhs: &Self) -> Self {
        self + *rhs
    }
}

impl<const P: u32> Sub<&Fp<P>> for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: &Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 as u64 * rhs.0 as u64 % P as u64) as u32)
    }
}

impl<const P: u32> Mul<&Fp<P>> for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: &Self) -> Self {
        self * *rhs
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "division by zero in F_{P}");
        self.pow(P as u64 - 2)
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let num = q.numer().mod_floor(&p).to_u32()?;
        let den = q.denom().mod_floor(&p).to_u32()?;
        if den == 0 {
            return None;
        }
        Some(Fp(num) * Fp(den).inv())
    }
}

/// The prime used by the optional fast mode.
pub type F32003 = Fp<32003>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        for v in 1..200 {
            let x = F32003::new(v);
            assert_eq!(x * x.inv(), F32003::one());
        }
    }

    #[test]
    fn fp_from_rational() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let h = F32003::from_rational(&half).unwrap();
        assert_eq!(h + h, F32003::one());
        let bad = Rational::new(BigInt::from(1), BigInt::from(32003));
        assert!(F32003::from_rational(&bad).is_none());
        assert_eq!(F32003::from_i64(-1), F32003::new(32002));
    }

    #[test]
    fn rational_sign() {
        assert!(Field::is_negative(&Rational::from_i64(-3)));
        assert!(!Field::is_negative(&Rational::from_i64(0)));
    }
}
