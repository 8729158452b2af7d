//! Compositions of an integer: ordered lists of positive parts with a fixed
//! sum, their partial-sum weights, the left-partial-sum set encoding, the
//! complement correspondence and the `{1,2}` ↔ odd-parts bijection.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{factorial, from_bigint, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("compositions of 0 are not enumerated")]
    ZeroWeight,
    #[error("a composition needs at least one part")]
    Empty,
    #[error("parts must be positive")]
    ZeroPart,
    #[error("part set must be nonempty")]
    EmptyPartSet,
    #[error("part {0} is not 1 or 2")]
    NotOneOrTwo(usize),
    #[error("part {0} is not odd")]
    EvenPart(usize),
    #[error("left partial sum {sum} is outside 1..{n}")]
    BadLeftSum { sum: usize, n: usize },
    #[error("need 1 <= l <= n, got l = {l}, n = {n}")]
    LengthOutOfRange { n: usize, l: usize },
}

/// Ordered list `p_1..p_l` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|p| = p_1 + … + p_l`
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// `s_1, …, s_l`; the last one is the weight.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// `s_p`: product of every partial sum but the last.
    pub fn s_weight(&self) -> BigInt {
        s_weight_of(&self.parts)
    }

    /// `s_{p'}`, the weight of the reversed composition.
    pub fn reversed_s_weight(&self) -> BigInt {
        reversed_s_weight_of(&self.parts)
    }

    pub fn part_product(&self) -> BigInt {
        self.parts.iter().map(|&p| BigInt::from(p)).product()
    }

    /// `L_p = {s_1, …, s_{l−1}} ⊆ {1..n−1}`.
    pub fn left_sum_set(&self) -> BTreeSet<usize> {
        let mut sums = self.partial_sums();
        sums.pop();
        sums.into_iter().collect()
    }

    /// Inverse of [`Composition::left_sum_set`]: differences of the sorted
    /// set with `0` and `n` adjoined.
    pub fn from_left_sums(sums: &BTreeSet<usize>, n: usize) -> Result<Self, CompositionError> {
        if n == 0 {
            return Err(CompositionError::ZeroWeight);
        }
        if let Some(&bad) = sums.iter().find(|&&s| s == 0 || s >= n) {
            return Err(CompositionError::BadLeftSum { sum: bad, n });
        }
        let mut parts = Vec::with_capacity(sums.len() + 1);
        let mut prev = 0;
        for &s in sums.iter().chain(std::iter::once(&n)) {
            parts.push(s - prev);
            prev = s;
        }
        Ok(Composition { parts })
    }

    /// The composition whose left sums are exactly the points `1..n−1`
    /// missing from this one's.
    pub fn complement(&self) -> Composition {
        let n = self.weight();
        let own = self.left_sum_set();
        let rest: BTreeSet<usize> = (1..n).filter(|s| !own.contains(s)).collect();
        Composition::from_left_sums(&rest, n).expect("complement sums lie in 1..n")
    }
}

pub(crate) fn s_weight_of(parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut s = 0;
    for &p in &parts[..parts.len().saturating_sub(1)] {
        s += p;
        acc *= s;
    }
    acc
}

pub(crate) fn reversed_s_weight_of(parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut s = 0;
    for &p in parts[1..].iter().rev() {
        s += p;
        acc *= s;
    }
    acc
}

/// Restriction on the parts a composition may use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartFilter {
    All,
    PartsIn(BTreeSet<usize>),
    OddOnly,
}

impl PartFilter {
    pub fn one_two() -> Self {
        PartFilter::PartsIn([1, 2].into_iter().collect())
    }

    pub fn admits(&self, part: usize) -> bool {
        match self {
            PartFilter::All => part >= 1,
            PartFilter::PartsIn(set) => set.contains(&part),
            PartFilter::OddOnly => part % 2 == 1,
        }
    }
}

/// Streaming lexicographic enumeration of the compositions of `n` whose
/// parts pass a [`PartFilter`]. Only the current composition is held.
#[derive(Debug, Clone)]
pub struct Compositions {
    allowed: Vec<usize>,
    // feasible[r]: r can be written with allowed parts
    feasible: Vec<bool>,
    stack: Vec<usize>,
    remaining: usize,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// Enumerates every admissible composition of `n` exactly once in
/// lexicographic order of parts.
pub fn enumerate(n: usize, filter: &PartFilter) -> Result<Compositions, CompositionError> {
    if n == 0 {
        return Err(CompositionError::ZeroWeight);
    }
    if matches!(filter, PartFilter::PartsIn(s) if s.is_empty()) {
        return Err(CompositionError::EmptyPartSet);
    }
    let allowed: Vec<usize> = (1..=n).filter(|&p| filter.admits(p)).collect();
    let mut feasible = vec![false; n + 1];
    feasible[0] = true;
    for r in 1..=n {
        feasible[r] = allowed.iter().any(|&a| a <= r && feasible[r - a]);
    }
    Ok(Compositions {
        allowed,
        feasible,
        stack: Vec::with_capacity(n),
        remaining: n,
        state: IterState::Fresh,
    })
}

impl Compositions {
    fn fill(&mut self) {
        while self.remaining > 0 {
            let r = self.remaining;
            let a = *self
                .allowed
                .iter()
                .find(|&&a| a <= r && self.feasible[r - a])
                .expect("feasible remainder has a first part");
            self.stack.push(a);
            self.remaining -= a;
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(p) = self.stack.pop() {
            self.remaining += p;
            let r = self.remaining;
            let next = self
                .allowed
                .iter()
                .find(|&&a| a > p && a <= r && self.feasible[r - a])
                .copied();
            if let Some(a) = next {
                self.stack.push(a);
                self.remaining -= a;
                self.fill();
                return true;
            }
        }
        false
    }

    /// Moves to the next composition and lends its parts without allocating.
    pub fn next_parts(&mut self) -> Option<&[usize]> {
        let ok = match self.state {
            IterState::Done => false,
            IterState::Fresh => {
                if self.feasible[self.remaining] {
                    self.fill();
                    true
                } else {
                    false
                }
            }
            IterState::Running => self.advance(),
        };
        if ok {
            self.state = IterState::Running;
            Some(&self.stack)
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        self.next_parts().map(|p| Composition { parts: p.to_vec() })
    }
}

/// Maps a `{1,2}`-composition of `m` to an odd-parts composition of `m+1`:
/// prepend a `1`, then fold each `2` into the part before it.
pub fn odd_bijection(c: &Composition) -> Result<Composition, CompositionError> {
    let mut parts = vec![1];
    for &p in c.parts() {
        match p {
            1 => parts.push(1),
            2 => *parts.last_mut().expect("starts with the prepended 1") += 2,
            other => return Err(CompositionError::NotOneOrTwo(other)),
        }
    }
    Ok(Composition { parts })
}

/// Inverse of [`odd_bijection`]: each odd part `2m+1` becomes `1` followed by
/// `m` twos, and the leading `1` is dropped. Weight-1 input has no preimage
/// since the result would be empty.
pub fn odd_bijection_inverse(c: &Composition) -> Result<Composition, CompositionError> {
    let mut parts = Vec::with_capacity(c.weight());
    for &p in c.parts() {
        if p % 2 == 0 {
            return Err(CompositionError::EvenPart(p));
        }
        parts.push(1);
        parts.extend(std::iter::repeat_n(2, p / 2));
    }
    parts.remove(0);
    Composition::new(parts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Unsigned, cycle counting.
    First,
    /// Set partitions.
    Second,
}

/// Stirling numbers from the composition sums
/// `n!/l! Σ 1/(p_1⋯p_l)` and `n!/l! Σ 1/(p_1!⋯p_l!)` over `l`-part
/// compositions of `n`.
pub fn stirling_via_compositions(
    kind: StirlingKind,
    n: usize,
    l: usize,
) -> Result<BigInt, CompositionError> {
    if l == 0 || l > n {
        return Err(CompositionError::LengthOutOfRange { n, l });
    }
    let mut sum = ExactRational::zero();
    let mut iter = enumerate(n, &PartFilter::All)?;
    while let Some(parts) = iter.next_parts() {
        if parts.len() != l {
            continue;
        }
        let denom: BigInt = parts
            .iter()
            .map(|&p| match kind {
                StirlingKind::First => BigInt::from(p),
                StirlingKind::Second => factorial(p),
            })
            .product();
        sum += ExactRational::new(BigInt::one(), denom);
    }
    let value = sum * from_bigint(factorial(n)) / from_bigint(factorial(l));
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn all(n: usize, f: &PartFilter) -> Vec<Vec<usize>> {
        enumerate(n, f)
            .unwrap()
            .map(|c| c.parts().to_vec())
            .collect()
    }

    #[test]
    fn lexicographic_listing() {
        assert_eq!(
            all(3, &PartFilter::All),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]
        );
        assert_eq!(all(4, &PartFilter::one_two()).len(), 5);
        assert_eq!(
            all(5, &PartFilter::OddOnly),
            vec![
                vec![1, 1, 1, 1, 1],
                vec![1, 1, 3],
                vec![1, 3, 1],
                vec![3, 1, 1],
                vec![5]
            ]
        );
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(
            enumerate(0, &PartFilter::All).err(),
            Some(CompositionError::ZeroWeight)
        );
        assert_eq!(
            enumerate(3, &PartFilter::PartsIn(BTreeSet::new())).err(),
            Some(CompositionError::EmptyPartSet)
        );
    }

    #[test]
    fn infeasible_filter_yields_nothing() {
        let evens = PartFilter::PartsIn([2].into_iter().collect());
        assert!(all(5, &evens).is_empty());
        assert_eq!(all(6, &evens), vec![vec![2, 2, 2]]);
    }

    #[test]
    fn counts() {
        for n in 1..=20 {
            assert_eq!(
                enumerate(n, &PartFilter::All).unwrap().count(),
                1 << (n - 1)
            );
        }
        let mut fib = vec![0usize, 1, 2];
        for n in 3..=25 {
            fib.push(fib[n - 1] + fib[n - 2]);
        }
        for (n, &f) in fib.iter().enumerate().skip(1) {
            assert_eq!(enumerate(n, &PartFilter::one_two()).unwrap().count(), f);
        }
        for n in 2..=20 {
            assert_eq!(
                enumerate(n, &PartFilter::OddOnly).unwrap().count(),
                enumerate(n - 1, &PartFilter::one_two()).unwrap().count()
            );
        }
    }

    #[test]
    fn strictly_increasing_lex_order() {
        let list: Vec<_> = enumerate(9, &PartFilter::All).unwrap().collect();
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn weights() {
        assert_eq!(comp(&[7]).s_weight(), BigInt::one());
        assert_eq!(comp(&[1, 1, 1]).s_weight(), BigInt::from(2));
        assert_eq!(comp(&[2, 1, 1]).s_weight(), BigInt::from(6));
        assert_eq!(comp(&[2, 1, 1]).reversed_s_weight(), BigInt::from(2));
        assert_eq!(comp(&[1, 2]).reversed_s_weight(), comp(&[2, 1]).s_weight());
    }

    #[test]
    fn left_sums() {
        assert_eq!(comp(&[1, 3]).left_sum_set(), BTreeSet::from([1]));
        assert!(comp(&[4]).left_sum_set().is_empty());
        assert_eq!(comp(&[1, 1, 2]).left_sum_set(), BTreeSet::from([1, 2]));
        assert_eq!(
            Composition::from_left_sums(&BTreeSet::from([4]), 4).err(),
            Some(CompositionError::BadLeftSum { sum: 4, n: 4 })
        );
    }

    #[test]
    fn left_sums_determine_composition() {
        for n in 1..=10 {
            for c in enumerate(n, &PartFilter::All).unwrap() {
                assert_eq!(
                    Composition::from_left_sums(&c.left_sum_set(), n).unwrap(),
                    c
                );
            }
        }
    }

    #[test]
    fn complements() {
        assert_eq!(comp(&[1, 3]).complement(), comp(&[2, 1, 1]));
        assert_eq!(comp(&[5]).complement(), comp(&[1, 1, 1, 1, 1]));
        assert_eq!(comp(&[1]).complement(), comp(&[1]));
        for c in enumerate(8, &PartFilter::All).unwrap() {
            assert_eq!(c.complement().complement(), c);
        }
    }

    #[test]
    fn odd_bijection_traces() {
        assert_eq!(odd_bijection(&comp(&[1, 2, 1])).unwrap(), comp(&[1, 3, 1]));
        assert_eq!(odd_bijection(&comp(&[1])).unwrap(), comp(&[1, 1]));
        assert_eq!(odd_bijection(&comp(&[2, 2])).unwrap(), comp(&[5]));
        assert_eq!(
            odd_bijection(&comp(&[1, 3])).err(),
            Some(CompositionError::NotOneOrTwo(3))
        );
        assert_eq!(
            odd_bijection_inverse(&comp(&[2, 1])).err(),
            Some(CompositionError::EvenPart(2))
        );
    }

    #[test]
    fn odd_bijection_round_trip() {
        for m in 1..=14 {
            for c in enumerate(m, &PartFilter::one_two()).unwrap() {
                let image = odd_bijection(&c).unwrap();
                assert_eq!(image.weight(), m + 1);
                assert!(image.parts().iter().all(|p| p % 2 == 1));
                assert_eq!(odd_bijection_inverse(&image).unwrap(), c);
            }
            for c in enumerate(m + 1, &PartFilter::OddOnly).unwrap() {
                assert_eq!(
                    odd_bijection(&odd_bijection_inverse(&c).unwrap()).unwrap(),
                    c
                );
            }
        }
    }

    #[test]
    fn absorption_order_irrelevant() {
        // Apply the rewrite (…, k, 2, …) -> (…, k+2, …) at the rightmost
        // eligible spot instead of left to right.
        for m in 1..=12 {
            for c in enumerate(m, &PartFilter::one_two()).unwrap() {
                let mut parts = vec![1];
                parts.extend_from_slice(c.parts());
                while let Some(i) = (1..parts.len())
                    .rev()
                    .find(|&i| parts[i] == 2 && parts[i - 1] % 2 == 1)
                {
                    parts[i - 1] += 2;
                    parts.remove(i);
                }
                assert_eq!(parts, odd_bijection(&c).unwrap().parts());
            }
        }
    }

    fn stirling_table(kind: StirlingKind, max: usize) -> Vec<Vec<BigInt>> {
        let mut s = vec![vec![BigInt::zero(); max + 1]; max + 1];
        s[0][0] = BigInt::one();
        for n in 1..=max {
            for k in 1..=n {
                let carry = match kind {
                    StirlingKind::First => &s[n - 1][k] * (n - 1),
                    StirlingKind::Second => &s[n - 1][k] * k,
                };
                s[n][k] = &s[n - 1][k - 1] + carry;
            }
        }
        s
    }

    #[test]
    fn stirling_numbers() {
        assert_eq!(
            stirling_via_compositions(StirlingKind::First, 3, 2).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            stirling_via_compositions(StirlingKind::Second, 3, 2).unwrap(),
            BigInt::from(3)
        );
        assert!(stirling_via_compositions(StirlingKind::First, 3, 4).is_err());
        assert!(stirling_via_compositions(StirlingKind::First, 3, 0).is_err());
        for kind in [StirlingKind::First, StirlingKind::Second] {
            let table = stirling_table(kind, 10);
            for (n, row) in table.iter().enumerate().skip(1) {
                assert_eq!(
                    stirling_via_compositions(kind, n, n).unwrap(),
                    BigInt::one()
                );
                for (l, expected) in row.iter().enumerate().take(n + 1).skip(1) {
                    assert_eq!(&stirling_via_compositions(kind, n, l).unwrap(), expected);
                }
            }
        }
    }
}
