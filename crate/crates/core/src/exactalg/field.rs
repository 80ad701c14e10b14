//! Coefficient fields.
//!
//! Everything above this module is generic over [`Field`], which is
//! [`num_traits::Num`] plus the handful of operations a Gröbner engine needs.
//! Two backends ship with the crate: exact rationals ([`BigRational`]) and
//! prime fields with a compile-time modulus ([`Zp`]).

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

/// A commutative field usable as the coefficient domain of a polynomial ring.
pub trait Field:
    Num + Neg<Output = Self> + Clone + Eq + Debug + Display + Send + Sync + 'static
{
    /// The image of an integer under the canonical map `Z -> k`.
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;

    /// Characteristic of the field (`0` for the rationals).
    fn characteristic() -> u64;

    /// Short human-readable name, e.g. `"QQ"` or `"GF(32003)"`.
    fn name() -> String;

    /// True for `-1`; used by the printer to write `- X` instead of `-1*X`.
    fn is_minus_one(&self) -> bool {
        (self.clone() + Self::one()).is_zero()
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn characteristic() -> u64 {
        0
    }

    fn name() -> String {
        "QQ".to_string()
    }
}

/// Residues modulo the prime `P`.
///
/// The value is always kept in `[0, P)`. `P` must be prime; this is checked
/// when the first inverse is taken in debug builds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Zp<const P: u64>(u64);

impl<const P: u64> Zp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Zp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Zp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i.saturating_mul(i) <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

impl<const P: u64> Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Zp<P> {
    /// Residues are printed in the symmetric range `(-P/2, P/2]` so that
    /// small negative integers read naturally.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u64> Add for Zp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u128 + rhs.0 as u128;
        Zp((s % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Zp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        if self.0 >= rhs.0 {
            Zp(self.0 - rhs.0)
        } else {
            Zp(P - (rhs.0 - self.0))
        }
    }
}

impl<const P: u64> Mul for Zp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Zp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Zp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Zp(P - self.0)
        }
    }
}

impl<const P: u64> Div for Zp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

// Division in a field is exact.
impl<const P: u64> Rem for Zp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "remainder by zero");
        Zp(0)
    }
}

impl<const P: u64> Zero for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Zp<P> {
    fn one() -> Self {
        Zp(1 % P)
    }
}

impl<const P: u64> Num for Zp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if let Some(rest) = s.strip_prefix('-') {
            Ok(-Zp::new(u64::from_str_radix(rest, radix)?))
        } else {
            Ok(Zp::new(u64::from_str_radix(s, radix)?))
        }
    }
}

impl<const P: u64> Field for Zp<P> {
    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P as i64);
        Zp(r as u64)
    }

    fn inverse(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in GF({P})");
        debug_assert!(is_prime(P), "modulus {P} is not prime");
        self.pow(P - 2)
    }

    fn characteristic() -> u64 {
        P
    }

    fn name() -> String {
        format!("GF({P})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Zp<7>;

    #[test]
    fn residues_stay_in_range() {
        for a in 0..7 {
            for b in 0..7 {
                let (x, y) = (F7::new(a), F7::new(b));
                assert!((x + y).value() < 7);
                assert!((x - y).value() < 7);
                assert!((x * y).value() < 7);
                assert_eq!(((x - y) + y), x);
            }
        }
        assert_eq!(F7::from_i64(-1).value(), 6);
        assert_eq!(F7::from_i64(-15).value(), 6);
    }

    #[test]
    fn inverses() {
        for a in 1..7 {
            let x = F7::new(a);
            assert_eq!(x * x.inverse(), F7::one());
        }
        let half = BigRational::from_i64(2).inverse();
        assert_eq!(half * BigRational::from_i64(2), BigRational::one());
    }

    #[test]
    fn rationals_are_reduced() {
        let q = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(*q.numer(), BigInt::from(-3));
        assert_eq!(*q.denom(), BigInt::from(2));
    }

    #[test]
    fn large_prime_products_do_not_wrap() {
        type Big = Zp<2147483647>;
        let x = Big::new(2147483646);
        assert_eq!(x * x, Big::one());
        assert!(Big::from_i64(-1).is_minus_one());
    }

    #[test]
    fn symmetric_display() {
        assert_eq!(F7::from_i64(-2).to_string(), "-2");
        assert_eq!(F7::from_i64(3).to_string(), "3");
    }
}
