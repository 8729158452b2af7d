//! Subsets of the order simplex `S^N(n) = {0 ≤ x_1 < … < x_N ≤ n}` counted by
//! the values of one coordinate.
//!
//! For a coordinate `d`, `c_v` is the number of points with `x_d = v`. An
//! `l`-subset of points whose `d`-th coordinates are pairwise distinct picks
//! at most one point per value, so its enumerator is `∏_v (1 + c_v t)`; the
//! sparse and 2-sparse enumerators restrict which values may be used
//! together and are computed by dynamic programming over values. A literal
//! subset enumerator is kept as an independent oracle.

mod scan;
mod theorems;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{
    binomial, from_bigint, product_of_linear_factors, CountingPolynomial, ExactRational,
    Indeterminate, Polynomial,
};

pub use scan::{
    conjecture_scan, dominance_prefix, ScanConfig, ScanRow, MAX_SCAN_BOUND, MAX_SCAN_LEN,
};
pub use theorems::{
    check_thm1, check_thm2, check_thm3, dominance, CellRelation, DominanceCell, DominanceCheck,
    Thm2Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplexError {
    #[error("tuple length must be at least 1")]
    EmptyTuple,
    #[error("S^{len}({bound}) is empty: need n >= N - 1")]
    EmptySimplex { len: usize, bound: usize },
    #[error("coordinate {d} is outside 1..={len}")]
    CoordinateOutOfRange { d: usize, len: usize },
    #[error("brute force over {points} points up to size {l_max} exceeds the work limit")]
    BruteForceTooLarge { points: usize, l_max: usize },
    #[error("{what} needs n >= {min}, got {n}")]
    BoundTooSmall {
        what: &'static str,
        min: usize,
        n: usize,
    },
    #[error("conjecture scan needs N > 2, got N_max = {0}")]
    ScanLengthTooSmall(usize),
    #[error("scan bounds exceed the guard (N <= {max_len}, n <= {max_bound})")]
    ScanTooLarge { max_len: usize, max_bound: usize },
    #[error("scan predicate must be distinct or sparse")]
    ScanPredicate,
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// `S^N(n)`: strictly increasing `N`-tuples drawn from `{0, …, n}`.
/// Coordinates are one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderSimplexSpec {
    len: usize,
    bound: usize,
}

impl OrderSimplexSpec {
    pub fn new(len: usize, bound: usize) -> Result<Self, SimplexError> {
        if len == 0 {
            return Err(SimplexError::EmptyTuple);
        }
        if bound + 1 < len {
            return Err(SimplexError::EmptySimplex { len, bound });
        }
        Ok(OrderSimplexSpec { len, bound })
    }

    /// `N`
    pub fn tuple_len(&self) -> usize {
        self.len
    }

    /// `n`
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `C(n+1, N)`
    pub fn point_count(&self) -> BigInt {
        binomial(self.bound + 1, self.len)
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<usize>> {
        (0..=self.bound).combinations(self.len)
    }

    fn check_coordinate(&self, d: usize) -> Result<(), SimplexError> {
        if d == 0 || d > self.len {
            Err(SimplexError::CoordinateOutOfRange { d, len: self.len })
        } else {
            Ok(())
        }
    }
}

/// Number of points with `x_d = v`, for each `v ∈ {0, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueHistogram {
    pub coordinate: usize,
    pub counts: Vec<BigInt>,
}

impl ValueHistogram {
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }
}

/// `c_v = C(v, d−1) · C(n−v, N−d)`: choose the `d−1` smaller coordinates
/// below `v` and the `N−d` larger ones above it.
pub fn value_histogram(spec: &OrderSimplexSpec, d: usize) -> Result<ValueHistogram, SimplexError> {
    spec.check_coordinate(d)?;
    let (n, big_n) = (spec.bound, spec.len);
    let counts = (0..=n)
        .map(|v| binomial(v, d - 1) * binomial(n - v, big_n - d))
        .collect();
    Ok(ValueHistogram {
        coordinate: d,
        counts,
    })
}

/// Constraint on the multiset of projected coordinate values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sparseness {
    /// No duplicates.
    Distinct,
    /// No duplicates and all gaps at least 2.
    Sparse,
    /// No two values share `⌊v/2⌋`.
    TwoSparse,
}

impl Sparseness {
    pub fn name(self) -> &'static str {
        match self {
            Sparseness::Distinct => "distinct",
            Sparseness::Sparse => "sparse",
            Sparseness::TwoSparse => "two-sparse",
        }
    }

    /// Whether two members of a multiset may coexist. All three predicates
    /// are pairwise, so a multiset passes iff every pair does.
    pub fn compatible(self, a: usize, b: usize) -> bool {
        match self {
            Sparseness::Distinct => a != b,
            Sparseness::Sparse => a.abs_diff(b) >= 2,
            Sparseness::TwoSparse => a / 2 != b / 2,
        }
    }

    pub fn admits(self, values: &[usize]) -> bool {
        values
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| self.compatible(a, b))
    }
}

fn to_rationals(counts: &[BigInt]) -> Vec<ExactRational> {
    counts.iter().cloned().map(from_bigint).collect()
}

/// `∏_v (1 + c_v t)`.
pub fn distinct_enumerator(
    spec: &OrderSimplexSpec,
    d: usize,
) -> Result<CountingPolynomial, SimplexError> {
    let h = value_histogram(spec, d)?;
    Ok(product_of_linear_factors(&to_rationals(&h.counts)))
}

/// `Σ_V (∏_{v∈V} c_v) t^{|V|}` over value sets with gaps `≥ 2`, via
/// `E_v = E_{v−1} + c_v t E_{v−2}`.
pub fn sparse_enumerator(
    spec: &OrderSimplexSpec,
    d: usize,
) -> Result<CountingPolynomial, SimplexError> {
    let h = value_histogram(spec, d)?;
    let one = Polynomial::one(Indeterminate::T);
    let (mut before_prev, mut prev) = (one.clone(), one);
    for c in &h.counts {
        let next = if c.is_zero() {
            prev.clone()
        } else {
            &prev + &before_prev.scale(&from_bigint(c.clone())).shift(1)
        };
        before_prev = std::mem::replace(&mut prev, next);
    }
    Ok(prev)
}

/// `∏_k (1 + (c_{2k} + c_{2k+1}) t)`.
pub fn two_sparse_enumerator(
    spec: &OrderSimplexSpec,
    d: usize,
) -> Result<CountingPolynomial, SimplexError> {
    let h = value_histogram(spec, d)?;
    let classes: Vec<BigInt> = h.counts.chunks(2).map(|pair| pair.iter().sum()).collect();
    Ok(product_of_linear_factors(&to_rationals(&classes)))
}

pub fn enumerator(
    spec: &OrderSimplexSpec,
    d: usize,
    predicate: Sparseness,
) -> Result<CountingPolynomial, SimplexError> {
    match predicate {
        Sparseness::Distinct => distinct_enumerator(spec, d),
        Sparseness::Sparse => sparse_enumerator(spec, d),
        Sparseness::TwoSparse => two_sparse_enumerator(spec, d),
    }
}

/// Search nodes the brute-force oracle may visit before giving up.
pub const BRUTE_FORCE_NODE_LIMIT: u64 = 200_000_000;
const BRUTE_FORCE_POINT_LIMIT: usize = 20_000;

/// Literal count of `l`-subsets of points (`l ≤ l_max`) whose `d`-th
/// coordinates satisfy the predicate.
///
/// Walks subsets of the point list in index order. The predicates are
/// hereditary, so a branch is cut as soon as its newest point clashes with
/// one already chosen; every admissible subset is still visited once.
pub fn brute_force_enumerator(
    spec: &OrderSimplexSpec,
    d: usize,
    predicate: Sparseness,
    l_max: usize,
) -> Result<CountingPolynomial, SimplexError> {
    spec.check_coordinate(d)?;
    let values: Vec<usize> = spec.points().map(|p| p[d - 1]).collect();
    let too_large = || SimplexError::BruteForceTooLarge {
        points: values.len(),
        l_max,
    };
    if values.len() > BRUTE_FORCE_POINT_LIMIT {
        return Err(too_large());
    }
    let mut counts = vec![0u64; l_max + 1];
    let mut chosen: Vec<usize> = Vec::with_capacity(l_max);
    let mut visited = 0u64;
    if !walk(
        &values,
        0,
        predicate,
        l_max,
        &mut chosen,
        &mut counts,
        &mut visited,
    ) {
        return Err(too_large());
    }
    Ok(Polynomial::new(
        Indeterminate::T,
        counts.into_iter().map(|c| from_bigint(c.into())).collect(),
    ))
}

fn walk(
    values: &[usize],
    start: usize,
    predicate: Sparseness,
    l_max: usize,
    chosen: &mut Vec<usize>,
    counts: &mut [u64],
    visited: &mut u64,
) -> bool {
    counts[chosen.len()] += 1;
    *visited += 1;
    if *visited > BRUTE_FORCE_NODE_LIMIT {
        return false;
    }
    if chosen.len() == l_max {
        return true;
    }
    for i in start..values.len() {
        let v = values[i];
        if chosen.iter().all(|&w| predicate.compatible(v, w)) {
            chosen.push(v);
            let ok = walk(values, i + 1, predicate, l_max, chosen, counts, visited);
            chosen.pop();
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn spec(len: usize, bound: usize) -> OrderSimplexSpec {
        OrderSimplexSpec::new(len, bound).unwrap()
    }

    fn t_poly(c: &[i64]) -> CountingPolynomial {
        Polynomial::new(Indeterminate::T, c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn guards() {
        assert_eq!(OrderSimplexSpec::new(0, 3), Err(SimplexError::EmptyTuple));
        assert!(OrderSimplexSpec::new(5, 3).is_err());
        assert!(OrderSimplexSpec::new(4, 3).is_ok());
        assert!(value_histogram(&spec(3, 4), 4).is_err());
        assert!(value_histogram(&spec(3, 4), 0).is_err());
    }

    #[test]
    fn histogram_specializations() {
        let n = 4;
        let y = value_histogram(&spec(3, n), 2).unwrap();
        assert_eq!(y.counts[2], BigInt::from(4));
        for j in 0..=n {
            assert_eq!(y.counts[j], BigInt::from(j * (n - j)));
        }
        let x = value_histogram(&spec(3, n), 1).unwrap();
        assert_eq!(x.counts[0], BigInt::from(6));
        for j in 1..=n {
            assert_eq!(x.counts[n - j], BigInt::from(j * (j - 1) / 2));
        }
        let mid = value_histogram(&spec(5, 7), 3).unwrap();
        assert_eq!(mid.counts[3], BigInt::from(18));
        for j in 0..=5 {
            assert_eq!(
                mid.counts[j + 1],
                binomial(j + 1, 2) * binomial(7 - j - 1, 2)
            );
        }
    }

    #[test]
    fn histogram_by_point_listing() {
        for (len, bound) in [(1, 3), (3, 6), (4, 7), (5, 8)] {
            let s = spec(len, bound);
            for d in 1..=len {
                let mut tally = vec![BigInt::zero(); bound + 1];
                for p in s.points() {
                    tally[p[d - 1]] += 1;
                }
                assert_eq!(value_histogram(&s, d).unwrap().counts, tally);
            }
        }
    }

    #[test]
    fn enumerators_n4() {
        let s = spec(3, 4);
        assert_eq!(
            distinct_enumerator(&s, 2).unwrap(),
            t_poly(&[1, 10, 33, 36])
        );
        assert_eq!(
            distinct_enumerator(&s, 1).unwrap(),
            t_poly(&[1, 10, 27, 18])
        );
        assert_eq!(sparse_enumerator(&s, 2).unwrap(), t_poly(&[1, 10, 9]));
        assert_eq!(two_sparse_enumerator(&s, 1).unwrap(), t_poly(&[1, 10, 9]));
    }

    #[test]
    fn single_class_and_spread_values() {
        // N = n + 1: a single point, every value count is 0 or 1
        let s = spec(3, 2);
        assert_eq!(two_sparse_enumerator(&s, 1).unwrap(), t_poly(&[1, 1]));
        assert_eq!(sparse_enumerator(&s, 2).unwrap(), t_poly(&[1, 1]));
        assert_eq!(distinct_enumerator(&s, 3).unwrap(), t_poly(&[1, 1]));
    }

    #[test]
    fn first_coefficient_counts_points() {
        for (len, bound) in [(3, 9), (5, 11), (7, 10)] {
            let s = spec(len, bound);
            for d in 1..=len {
                for pred in [
                    Sparseness::Distinct,
                    Sparseness::Sparse,
                    Sparseness::TwoSparse,
                ] {
                    let e = enumerator(&s, d, pred).unwrap();
                    assert_eq!(e.coeff(1), from_bigint(s.point_count()));
                    assert_eq!(e.coeff(0), int(1));
                }
            }
        }
    }

    #[test]
    fn predicate_examples() {
        assert!(!Sparseness::Sparse.admits(&[1, 3, 4, 7]));
        assert!(Sparseness::TwoSparse.admits(&[1, 3, 4, 7]));
        assert!(!Sparseness::Distinct.admits(&[2, 2]));
        assert!(!Sparseness::TwoSparse.admits(&[2, 2]));
        assert!(Sparseness::Sparse.admits(&[]));
    }

    #[test]
    fn brute_force_small() {
        let s = spec(3, 4);
        assert_eq!(
            brute_force_enumerator(&s, 2, Sparseness::Distinct, 3).unwrap(),
            t_poly(&[1, 10, 33, 36])
        );
        assert_eq!(
            brute_force_enumerator(&s, 2, Sparseness::Sparse, 2).unwrap(),
            t_poly(&[1, 10, 9])
        );
        assert_eq!(
            brute_force_enumerator(&s, 2, Sparseness::Sparse, 0).unwrap(),
            t_poly(&[1])
        );
    }

    #[test]
    fn brute_force_guard() {
        let s = spec(6, 30);
        assert!(matches!(
            brute_force_enumerator(&s, 1, Sparseness::Distinct, 4),
            Err(SimplexError::BruteForceTooLarge { .. })
        ));
    }
}
