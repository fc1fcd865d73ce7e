//! Fixed inputs shared by the benchmarks.

use std::sync::Arc;

use lexcone::sample::{self, trial_rng};
use lexcone::{FinCone, LexVector, Poset};

pub fn poset(n: usize, seed: u64) -> Arc<Poset> {
    Arc::new(sample::random_poset(
        &mut trial_rng(seed, 0, n as u64),
        n,
        0.3,
    ))
}

pub fn forest(n: usize, seed: u64) -> Arc<Poset> {
    Arc::new(sample::random_forest(&mut trial_rng(seed, 1, n as u64), n))
}

pub fn positive(p: &Arc<Poset>, seed: u64) -> LexVector {
    sample::mixed_positive(&mut trial_rng(seed, 2, p.len() as u64), p)
}

pub fn vector(p: &Arc<Poset>, seed: u64) -> LexVector {
    sample::random_vector(&mut trial_rng(seed, 3, p.len() as u64), p, 0.7)
}

pub fn pointed_cone(d: usize, seed: u64) -> FinCone {
    sample::random_pointed_cone(&mut trial_rng(seed, 4, d as u64), d, 5)
}
