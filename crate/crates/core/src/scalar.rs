//! Exact scalar types for closed-form evaluation.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// A field of exact rationals.
pub trait ExactScalar:
    Clone + fmt::Debug + fmt::Display + PartialOrd + Num + Neg<Output = Self> + Signed + Send + Sync
{
    fn from_i128(v: i128) -> Self;

    fn is_integral(&self) -> bool;

    fn from_i64(v: i64) -> Self {
        Self::from_i128(v.into())
    }

    fn frac(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// `2^e`, negative exponents allowed.
    fn pow2(e: i64) -> Self {
        let p = num_traits::pow(Self::from_i64(2), e.unsigned_abs() as usize);
        if e < 0 {
            Self::one() / p
        } else {
            p
        }
    }

    /// `4^e`, negative exponents allowed.
    fn pow4(e: i64) -> Self {
        Self::pow2(2 * e)
    }

    /// `1 + (-1)^k`: two for even `k`, zero for odd.
    fn parity(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::from_i64(2)
        } else {
            Self::zero()
        }
    }
}

impl ExactScalar for BigRational {
    fn from_i128(v: i128) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Fixed-width rationals overflow once `4^n` leaves `i128`; usable up to
/// roughly `n = 60`.
impl ExactScalar for Ratio<i128> {
    fn from_i128(v: i128) -> Self {
        Ratio::from_integer(v)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn powers() {
        assert_eq!(BigRational::pow2(10), BigRational::from_i64(1024));
        assert_eq!(BigRational::pow2(-2), BigRational::frac(1, 4));
        assert_eq!(Ratio::<i128>::pow4(3), Ratio::from_integer(64));
        assert_eq!(BigRational::parity(4), BigRational::from_i64(2));
        assert_eq!(BigRational::parity(-3), BigRational::zero());
    }

    #[test]
    fn integrality() {
        assert!(BigRational::frac(6, 3).is_integral());
        assert!(!BigRational::frac(7, 3).is_integral());
    }
}
