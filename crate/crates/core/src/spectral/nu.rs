use std::collections::BTreeSet;

use crate::algebra::{int, Coefficient, ExactRational, Indeterminate, Polynomial};

use super::SpectralError;

/// Rational function of `ν` whose denominator is `∏_{k∈roots} (ν − k)` with
/// distinct positive integer roots.
///
/// Kept in reduced form: the numerator never vanishes at a listed root, and
/// the zero function has no roots. Two equal functions therefore compare
/// equal structurally.
#[derive(Clone, PartialEq, Debug)]
pub struct NuRationalFunction<C> {
    numerator: Polynomial<C>,
    roots: BTreeSet<usize>,
}

impl<C: Coefficient> NuRationalFunction<C> {
    pub fn new(numerator: Polynomial<C>, roots: BTreeSet<usize>) -> Self {
        let mut f = NuRationalFunction {
            numerator: numerator.with_var(Indeterminate::Nu),
            roots,
        };
        f.reduce();
        f
    }

    pub fn zero() -> Self {
        Self::constant(C::zero())
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(Polynomial::constant(Indeterminate::Nu, c), BTreeSet::new())
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.numerator
    }

    pub fn denominator_roots(&self) -> &BTreeSet<usize> {
        &self.roots
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.roots.clear();
            return;
        }
        let removable: Vec<usize> = self
            .roots
            .iter()
            .copied()
            .filter(|&k| self.numerator.eval(&int(k as i64)).is_zero())
            .collect();
        for k in removable {
            self.numerator = divide_by_linear(&self.numerator, k);
            self.roots.remove(&k);
        }
    }

    /// Value at a regular point.
    pub fn eval(&self, nu: &ExactRational) -> Result<C, SpectralError> {
        let mut denom = ExactRational::from_integer(1.into());
        for &k in &self.roots {
            denom *= nu - int(k as i64);
        }
        if num_traits::Zero::is_zero(&denom) {
            return Err(SpectralError::Pole(nu.clone()));
        }
        Ok(self.numerator.eval(nu).scale(&denom.recip()))
    }

    /// Residue at `ν = n`; zero when `n` is not a pole.
    pub fn residue_at(&self, n: usize) -> C {
        if !self.roots.contains(&n) {
            return C::zero();
        }
        let at = int(n as i64);
        let mut denom = ExactRational::from_integer(1.into());
        for &k in self.roots.iter().filter(|&&k| k != n) {
            denom *= &at - int(k as i64);
        }
        self.numerator.eval(&at).scale(&denom.recip())
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let roots: BTreeSet<usize> = self.roots.union(&other.roots).copied().collect();
        let lift = |f: &Self| {
            f.roots_missing(&roots)
                .fold(f.numerator.clone(), |acc, k| multiply_by_linear(&acc, k))
        };
        let numerator = &lift(self) + &lift(other);
        Self::new(numerator, roots)
    }

    fn roots_missing<'a>(&'a self, all: &'a BTreeSet<usize>) -> impl Iterator<Item = usize> + 'a {
        all.difference(&self.roots).copied()
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self::new(self.numerator.scale_by(c), self.roots.clone())
    }

    /// Divides by `(ν − n)`. `n` must not already be a root.
    pub fn divide_by_pole(&self, n: usize) -> Self {
        assert!(!self.roots.contains(&n), "double pole at {n}");
        if self.is_zero() {
            return self.clone();
        }
        let mut roots = self.roots.clone();
        roots.insert(n);
        Self::new(self.numerator.clone(), roots)
    }
}

fn multiply_by_linear<C: Coefficient>(p: &Polynomial<C>, k: usize) -> Polynomial<C> {
    // (ν − k)·p
    let kq = int(k as i64);
    &p.shift(1) - &p.scale(&kq)
}

/// Exact quotient of `p` by `(ν − k)`; the caller guarantees `p(k) = 0`.
fn divide_by_linear<C: Coefficient>(p: &Polynomial<C>, k: usize) -> Polynomial<C> {
    let kq = int(k as i64);
    let a = p.coeffs();
    let d = a.len() - 1;
    let mut quotient = vec![C::zero(); d];
    let mut carry = C::zero();
    for i in (1..=d).rev() {
        carry = a[i].add_ref(&carry.scale(&kq));
        quotient[i - 1] = carry.clone();
    }
    Polynomial::new(Indeterminate::Nu, quotient)
}
