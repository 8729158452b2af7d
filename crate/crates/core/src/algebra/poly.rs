use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::{AlgebraError, Coefficient, ExactRational};

/// Name of the formal variable a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indeterminate {
    /// Subset/part marker.
    T,
    /// Hand-size marker of the exponential formula.
    Y,
    /// Series variable.
    Z,
    /// Spectral parameter.
    Nu,
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Indeterminate::T => "t",
            Indeterminate::Y => "y",
            Indeterminate::Z => "z",
            Indeterminate::Nu => "nu",
        })
    }
}

/// Dense univariate polynomial. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients at all.
///
/// Constants are compatible with every indeterminate: combining a constant
/// with a polynomial in `t` yields a polynomial in `t`. Two non-constant
/// polynomials in different indeterminates cannot be combined; the checked
/// methods report it and the operator impls panic.
#[derive(Clone, Debug)]
pub struct Polynomial<C = ExactRational> {
    coeffs: Vec<C>,
    var: Indeterminate,
}

/// Rational polynomial in a marker variable; the enumerators of the crate.
pub type CountingPolynomial = Polynomial<ExactRational>;

impl<C: Coefficient> Polynomial<C> {
    pub fn new(var: Indeterminate, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs, var }
    }

    pub fn zero(var: Indeterminate) -> Self {
        Polynomial {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn one(var: Indeterminate) -> Self {
        Self::constant(var, C::one())
    }

    pub fn constant(var: Indeterminate, c: C) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^k`
    pub fn monomial(var: Indeterminate, c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.push(c);
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> Indeterminate {
        self.var
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `var^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Same coefficients, relabelled indeterminate.
    pub fn with_var(mut self, var: Indeterminate) -> Self {
        self.var = var;
        self
    }

    fn join_var(&self, other: &Self) -> Result<Indeterminate, AlgebraError> {
        if self.var == other.var || other.is_constant() {
            Ok(self.var)
        } else if self.is_constant() {
            Ok(other.var)
        } else {
            Err(AlgebraError::IndeterminateMismatch {
                left: self.var,
                right: other.var,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let var = self.join_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::new(var, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&other.neg_ref())
    }

    /// Exact product; fails when both factors are non-constant polynomials
    /// in different indeterminates.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let var = self.join_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(var));
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Ok(Self::new(var, coeffs))
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.var, coeffs)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &ExactRational) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.scale(x).add_ref(c))
    }

    /// Lowest exponent at which the two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&k| self.coeff(k) != other.coeff(k))
    }
}

impl<C: PartialEq> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.var == other.var || self.coeffs.len() <= 1)
    }
}

impl<C: Eq> Eq for Polynomial<C> {}

impl<C: Coefficient> Coefficient for Polynomial<C> {
    fn zero() -> Self {
        Polynomial::zero(Indeterminate::T)
    }

    fn one() -> Self {
        Polynomial::one(Indeterminate::T)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
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
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
            var: self.var,
        }
    }

    fn scale(&self, k: &ExactRational) -> Self {
        Polynomial::scale(self, k)
    }

    fn from_rational(r: ExactRational) -> Self {
        Polynomial::constant(Indeterminate::T, C::from_rational(r))
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.neg_ref()
    }
}

impl fmt::Display for Polynomial<ExactRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        if mag.is_integer() {
                            write!(f, "{mag}")?;
                        } else {
                            write!(f, "{mag}*")?;
                        }
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `∏ (1 + c·t)` over the given constants; the empty product is `1`.
pub fn product_of_linear_factors(constants: &[ExactRational]) -> CountingPolynomial {
    // Grow the coefficient vector in place: multiplying by (1 + c t) is a
    // single backwards pass.
    let mut coeffs: Vec<ExactRational> = vec![super::int(1)];
    for c in constants {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        coeffs.push(num_traits::Zero::zero());
        for k in (1..coeffs.len()).rev() {
            let carry = &coeffs[k - 1] * c;
            coeffs[k] += carry;
        }
    }
    Polynomial::new(Indeterminate::T, coeffs)
}
