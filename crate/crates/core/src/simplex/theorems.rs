//! Coefficient-wise comparisons of enumerators on `S^3(n)` and `S^5(n)`.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::algebra::{CountingPolynomial, ExactRational};

use super::{
    distinct_enumerator, sparse_enumerator, two_sparse_enumerator, OrderSimplexSpec, SimplexError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellRelation {
    Greater,
    Equal,
    Less,
    /// Both coefficients vanish: no subsets of this size exist on either side.
    BothZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceCell {
    pub l: usize,
    pub larger: ExactRational,
    pub smaller: ExactRational,
    pub relation: CellRelation,
    pub in_range: bool,
    pub ok: bool,
}

/// Comparison of two enumerators over every degree up to the larger one.
///
/// Cells with `lo ≤ l ≤ hi` must be strictly greater or both zero; `l = 0`
/// and `l = 1` must agree; all remaining cells must not be smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceCheck {
    pub larger: CountingPolynomial,
    pub smaller: CountingPolynomial,
    pub lo: usize,
    pub hi: usize,
    pub cells: Vec<DominanceCell>,
    pub holds: bool,
}

impl DominanceCheck {
    pub fn failures(&self) -> impl Iterator<Item = &DominanceCell> {
        self.cells.iter().filter(|c| !c.ok)
    }
}

pub fn dominance(
    larger: CountingPolynomial,
    smaller: CountingPolynomial,
    lo: usize,
    hi: usize,
) -> DominanceCheck {
    let top = larger
        .degree()
        .unwrap_or(0)
        .max(smaller.degree().unwrap_or(0))
        .max(hi);
    let cells: Vec<DominanceCell> = (0..=top)
        .map(|l| {
            let (a, b) = (larger.coeff(l), smaller.coeff(l));
            let relation = match a.cmp(&b) {
                Ordering::Greater => CellRelation::Greater,
                Ordering::Less => CellRelation::Less,
                Ordering::Equal if a.is_zero() => CellRelation::BothZero,
                Ordering::Equal => CellRelation::Equal,
            };
            let in_range = lo <= l && l <= hi;
            let ok = if l <= 1 {
                matches!(relation, CellRelation::Equal | CellRelation::BothZero)
            } else if in_range {
                matches!(relation, CellRelation::Greater | CellRelation::BothZero)
            } else {
                relation != CellRelation::Less
            };
            DominanceCell {
                l,
                larger: a,
                smaller: b,
                relation,
                in_range,
                ok,
            }
        })
        .collect();
    let holds = cells.iter().all(|c| c.ok);
    DominanceCheck {
        larger,
        smaller,
        lo,
        hi,
        cells,
        holds,
    }
}

fn require(what: &'static str, min: usize, n: usize) -> Result<(), SimplexError> {
    if n < min {
        Err(SimplexError::BoundTooSmall { what, min, n })
    } else {
        Ok(())
    }
}

/// Distinct `y` against distinct `x` on `S^3(n)`, strict for `2 ≤ l ≤ n−1`.
pub fn check_thm1(n: usize) -> Result<DominanceCheck, SimplexError> {
    require("thm1", 3, n)?;
    let s = OrderSimplexSpec::new(3, n)?;
    Ok(dominance(
        distinct_enumerator(&s, 2)?,
        distinct_enumerator(&s, 1)?,
        2,
        n - 1,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm2Verdict {
    pub sparse_y: CountingPolynomial,
    pub two_sparse_x: CountingPolynomial,
    pub equal: bool,
    /// Sparse `y` against sparse `x`.
    pub dominance: DominanceCheck,
}

impl Thm2Verdict {
    pub fn holds(&self) -> bool {
        self.equal && self.dominance.holds
    }
}

/// Sparse `y` equals 2-sparse `x` on `S^3(n)`, and dominates sparse `x`.
pub fn check_thm2(n: usize) -> Result<Thm2Verdict, SimplexError> {
    require("thm2", 3, n)?;
    let s = OrderSimplexSpec::new(3, n)?;
    let sparse_y = sparse_enumerator(&s, 2)?;
    let two_sparse_x = two_sparse_enumerator(&s, 1)?;
    let equal = sparse_y == two_sparse_x;
    let dominance = dominance(sparse_y.clone(), sparse_enumerator(&s, 1)?, 2, n - 1);
    Ok(Thm2Verdict {
        sparse_y,
        two_sparse_x,
        equal,
        dominance,
    })
}

/// Sparse `x_3` against 2-sparse `x_1` on `S^5(n)`, strict for `2 ≤ l ≤ n−3`.
pub fn check_thm3(n: usize) -> Result<DominanceCheck, SimplexError> {
    require("thm3", 5, n)?;
    let s = OrderSimplexSpec::new(5, n)?;
    Ok(dominance(
        sparse_enumerator(&s, 3)?,
        two_sparse_enumerator(&s, 1)?,
        2,
        n - 3,
    ))
}
