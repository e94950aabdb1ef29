//! Coefficient rings for series and generating functions.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// A field-like scalar usable as a series coefficient.
///
/// Division is only ever performed by values the caller has checked to be
/// nonzero, so exact types and floats behave the same way.
pub trait Scalar: Num + Clone + Neg<Output = Self> + Debug + Display {
    /// Embeds an exact non-negative count.
    fn from_count(count: &BigUint) -> Self;

    /// The value `num / den`. `den` must be nonzero.
    fn ratio(num: i64, den: i64) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::ratio(value, 1)
    }
}

impl Scalar for BigRational {
    fn from_count(count: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(count.clone()))
    }

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Scalar for f64 {
    fn from_count(count: &BigUint) -> Self {
        count.to_f64().unwrap_or(f64::INFINITY)
    }

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl Scalar for f32 {
    fn from_count(count: &BigUint) -> Self {
        count.to_f32().unwrap_or(f32::INFINITY)
    }

    fn ratio(num: i64, den: i64) -> Self {
        num as f32 / den as f32
    }
}
