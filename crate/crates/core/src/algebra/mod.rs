//! Exact scalars, dense univariate polynomials, truncated power series and a
//! handful of classical special quantities.
//!
//! Every other module in the crate is built on these types. Nothing in here
//! ever rounds: scalars are [`ExactRational`] and all containers are generic
//! over the [`Coefficient`] trait so that a marker variable (such as `t` or
//! `y`) can ride along as a polynomial coefficient.

mod poly;
mod ring;
mod series;
mod special;

pub use poly::{product_of_linear_factors, CountingPolynomial, Indeterminate, Polynomial};
pub use ring::Coefficient;
pub use series::{series_exp, TruncatedSeries};
pub use special::{binomial, factorial, pochhammer};

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational, always normalized (lowest terms, positive
/// denominator).
pub type ExactRational = num_rational::BigRational;

/// Builds `num / den` as an exact rational.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as an exact rational.
pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// Lifts an arbitrary-precision integer into the rationals.
pub fn from_bigint(n: BigInt) -> ExactRational {
    ExactRational::from_integer(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("indeterminate mismatch: {left} vs {right}")]
    IndeterminateMismatch {
        left: Indeterminate,
        right: Indeterminate,
    },
    #[error("series exponential needs a zero constant term")]
    NonzeroConstantTerm,
}
