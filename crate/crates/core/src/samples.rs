//! Fixed-seed pseudo-random inputs shared by the tests, the acceptance suite
//! and `compsum verify first-order`.
//!
//! All generators draw from a `ChaCha8Rng` seeded with `seed_from_u64`, so a
//! given seed produces the same inputs on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, ExactRational};
use crate::spectral::{CoefficientArray, Potential};

/// Seed used whenever none is given.
pub const DEFAULT_SEED: u64 = 20_050_311;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `p ∈ [−5, 5]`, `q ∈ [1, 4]`.
pub fn small_rational(rng: &mut impl Rng) -> ExactRational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// `count` potentials of length `order`, rational coefficients as in
/// [`small_rational`].
pub fn potentials(seed: u64, count: usize, order: usize) -> Vec<Potential<ExactRational>> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| Potential::new((0..order).map(|_| small_rational(&mut rng)).collect()))
        .collect()
}

/// `count` arrays with entries drawn uniformly from `{−2, …, 2}`.
pub fn small_arrays(seed: u64, count: usize, bound: usize) -> Vec<CoefficientArray<ExactRational>> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| CoefficientArray::from_fn(bound, |_, _| rat(rng.gen_range(-2..=2), 1)))
        .collect()
}
