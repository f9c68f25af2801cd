//! Benchmark workloads.

use argon_core::random::{letter_names, random_framework};
use argon_core::Framework;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A reproducible random framework with `n` arguments.
pub fn workload(n: usize, density: f64, seed: u64) -> Framework {
    random_framework(
        &mut ChaCha8Rng::seed_from_u64(seed),
        &letter_names(n),
        density,
    )
}
