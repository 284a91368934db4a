use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{ratio, Rational};

const COEFFICIENTS: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];

/// Deterministic generator for all sampling in this crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from `{-2, -1, -1/2, 0, 1/2, 1, 2}`.
pub fn sample_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let (p, q) = COEFFICIENTS.choose(rng).expect("nonempty");
    ratio(*p, *q)
}
