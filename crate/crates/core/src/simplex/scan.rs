//! Grid scan comparing coordinate `d+1` with coordinate `d` on `S^N(n)`.

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::algebra::CountingPolynomial;

use super::{enumerator, OrderSimplexSpec, SimplexError, Sparseness};

pub const MAX_SCAN_LEN: usize = 12;
pub const MAX_SCAN_BOUND: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub len_max: usize,
    pub bound_max: usize,
    pub predicate: Sparseness,
    /// Worker threads; 0 lets rayon decide.
    pub parallelism: usize,
    /// Also emit cells with `2d ≥ N`.
    pub include_outside: bool,
}

impl ScanConfig {
    pub fn new(len_max: usize, bound_max: usize) -> Self {
        ScanConfig {
            len_max,
            bound_max,
            predicate: Sparseness::Distinct,
            parallelism: 0,
            include_outside: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub len: usize,
    pub d: usize,
    pub bound: usize,
    /// Largest `L` with strict dominance at every `2 ≤ l ≤ L`; 1 if none.
    pub prefix: usize,
    /// Enumerator for coordinate `d+1`.
    pub upper: CountingPolynomial,
    /// Enumerator for coordinate `d`.
    pub lower: CountingPolynomial,
    pub outside: bool,
}

impl ScanRow {
    /// First 16 hex digits of SHA-256 over both coefficient lists.
    pub fn digest(&self) -> String {
        let join = |p: &CountingPolynomial| {
            p.coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let canonical = format!("{};{}", join(&self.upper), join(&self.lower));
        let hash = Sha256::digest(canonical.as_bytes());
        hex::encode(&hash[..8])
    }
}

pub fn dominance_prefix(larger: &CountingPolynomial, smaller: &CountingPolynomial) -> usize {
    let mut l = 2;
    while larger.coeff(l) > smaller.coeff(l) {
        l += 1;
    }
    l - 1
}

fn admissible(len: usize, d: usize) -> bool {
    2 * d < len
}

fn cells(config: &ScanConfig) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for len in 3..=config.len_max {
        for d in 1..len {
            let outside = !admissible(len, d);
            if outside && !config.include_outside {
                continue;
            }
            for bound in len..=config.bound_max {
                out.push((len, d, bound));
            }
        }
    }
    out
}

fn scan_cell(
    len: usize,
    d: usize,
    bound: usize,
    predicate: Sparseness,
) -> Result<ScanRow, SimplexError> {
    let spec = OrderSimplexSpec::new(len, bound)?;
    let upper = enumerator(&spec, d + 1, predicate)?;
    let lower = enumerator(&spec, d, predicate)?;
    Ok(ScanRow {
        len,
        d,
        bound,
        prefix: dominance_prefix(&upper, &lower),
        upper,
        lower,
        outside: !admissible(len, d),
    })
}

/// Rows for `3 ≤ N ≤ len_max`, `N ≤ n ≤ bound_max`, sorted by `(N, d, n)`.
/// The output does not depend on `parallelism`.
pub fn conjecture_scan(config: &ScanConfig) -> Result<Vec<ScanRow>, SimplexError> {
    if config.len_max < 3 {
        return Err(SimplexError::ScanLengthTooSmall(config.len_max));
    }
    if config.len_max > MAX_SCAN_LEN || config.bound_max > MAX_SCAN_BOUND {
        return Err(SimplexError::ScanTooLarge {
            max_len: MAX_SCAN_LEN,
            max_bound: MAX_SCAN_BOUND,
        });
    }
    if config.predicate == Sparseness::TwoSparse {
        return Err(SimplexError::ScanPredicate);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| SimplexError::ThreadPool(e.to_string()))?;
    let work = cells(config);
    let mut rows = pool.install(|| {
        work.par_iter()
            .map(|&(len, d, bound)| scan_cell(len, d, bound, config.predicate))
            .collect::<Result<Vec<_>, _>>()
    })?;
    rows.sort_by_key(|r| (r.len, r.d, r.bound));
    Ok(rows)
}
