use std::fmt;

use num_traits::{One, Zero};

use super::ExactRational;

/// A commutative ring containing the rationals, i.e. something a
/// polynomial, a series or a recurrence can use as its coefficients.
///
/// Implemented by [`ExactRational`] and by [`super::Polynomial`] over any
/// coefficient type, which is how marker variables are carried exactly.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, k: &ExactRational) -> Self;
    fn from_rational(r: ExactRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(super::int(n))
    }
}

impl Coefficient for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn scale(&self, k: &ExactRational) -> Self {
        self * k
    }

    fn from_rational(r: ExactRational) -> Self {
        r
    }
}
