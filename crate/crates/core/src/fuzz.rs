//! Seeded random chains for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::ChainSpec;

/// A spec at index `r` where every pair in `[r]` is an edge with probability
/// `density`. If no pair is drawn, one uniformly random pair is used.
pub fn random_spec<R: Rng + ?Sized>(rng: &mut R, r: usize, density: f64) -> ChainSpec {
    assert!(r >= 2, "r must be at least 2");
    assert!(
        density > 0.0 && density <= 1.0,
        "density must lie in (0, 1]"
    );
    let mut edges = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    if edges.is_empty() {
        let i = rng.gen_range(1..r);
        let j = rng.gen_range(i + 1..=r);
        edges.push((i, j));
    }
    ChainSpec::new(r, edges).expect("pairs lie in [r]")
}

/// Reproducible spec at index `r_max` for the given seed.
pub fn generate_random_spec(r_max: usize, density: f64, seed: u64) -> ChainSpec {
    random_spec(&mut ChaCha8Rng::seed_from_u64(seed), r_max, density)
}
