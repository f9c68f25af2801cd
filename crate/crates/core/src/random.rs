//! Seeded random frameworks for sampling-based tests and checks.

use rand::Rng;

use crate::framework::Framework;

/// `A`..`Z` for the first 26 arguments, then `A26`, `A27`, ...
pub fn letter_name(index: usize) -> String {
    if index < 26 {
        char::from(b'A' + index as u8).to_string()
    } else {
        format!("A{index}")
    }
}

pub fn letter_names(n: usize) -> Vec<String> {
    (0..n).map(letter_name).collect()
}

/// `1`..`n`, the naming used by the AF (DIMACS-style) format.
pub fn numeric_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// A framework on `names` where each of the `n²` possible attacks
/// (self-attacks included) is present with probability `density`.
pub fn random_framework<R: Rng>(rng: &mut R, names: &[String], density: f64) -> Framework {
    let n = names.len();
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if rng.gen_bool(density) {
                attacks.push((a, b));
            }
        }
    }
    Framework::from_indices(names, attacks).expect("generated names are valid and distinct")
}
