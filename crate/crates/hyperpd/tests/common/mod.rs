//! Shared generators for the integration suites: seeded randomness so every
//! run sees the same instances.

use hyperpd::ideal::MonomialIdeal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random square-free monomial ideal over at most `max_vars` variables
/// with at most `max_gens` generators, minimalized. Never zero, never the
/// unit ideal.
pub fn random_ideal(rng: &mut ChaCha8Rng, max_vars: usize, max_gens: usize) -> MonomialIdeal {
    const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];
    assert!((2..=NAMES.len()).contains(&max_vars));
    loop {
        let nvars = rng.gen_range(2..=max_vars);
        let ngens = rng.gen_range(1..=max_gens);
        let mut gens: Vec<String> = Vec::new();
        for _ in 0..ngens {
            let support: String = (0..nvars)
                .filter(|_| rng.gen_bool(0.45))
                .map(|i| NAMES[i])
                .collect();
            if !support.is_empty() {
                gens.push(support);
            }
        }
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::parse(&gens.join(", "))
            .expect("generators use known variable names")
            .minimalize();
        if ideal.num_gens() >= 1 {
            return ideal;
        }
    }
}

/// A random subset of `1..=mu` with at least `min_size` elements.
pub fn random_positions(rng: &mut ChaCha8Rng, mu: usize, min_size: usize) -> Vec<usize> {
    loop {
        let picked: Vec<usize> = (1..=mu).filter(|_| rng.gen_bool(0.4)).collect();
        if picked.len() >= min_size {
            return picked;
        }
    }
}
