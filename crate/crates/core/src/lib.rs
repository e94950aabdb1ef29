//! Pattern-avoiding inversion sequences.
//!
//! The crate covers four layers:
//!
//! * [`seqcore`]: words, inversion sequences, pattern reduction and
//!   containment, lexicographic enumeration of avoiders, and the `srpt` /
//!   `last` statistics.
//! * [`counting`]: the triangle `f_n(k, l)` of 0012-avoiders refined by
//!   `(srpt, last)`, computed by recurrence and by brute force.
//! * [`closedform`]: exact closed-form counts (binomial sums, Bell and large
//!   Schröder numbers, powers of two).
//! * [`series`]: truncated formal power series over a generic [`Scalar`]
//!   ring, generating functions assembled from the triangle, and exact
//!   residual checks for the functional equations they satisfy.
//!
//! Series and generating-function code is generic over the coefficient type.
//! Exact work uses [`Rational`]; [`F64Series`] is available for quick
//! numerical exploration.

pub mod closedform;
pub mod counting;
mod error;
pub mod scalar;
pub mod seqcore;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Scalar;

use num_bigint::BigUint;

/// Exact rational coefficient ring.
pub type Rational = num_rational::BigRational;

/// Truncated power series with exact rational coefficients.
pub type RationalSeries = series::TruncatedSeries<Rational>;

/// Truncated power series with `f64` coefficients.
pub type F64Series = series::TruncatedSeries<f64>;

/// Statistic triangle with arbitrary-precision counts.
pub type BigTriangle = counting::StatTriangle<BigUint>;

/// Statistic triangle with machine-word counts; overflows past n ≈ 30.
pub type U64Triangle = counting::StatTriangle<u64>;
