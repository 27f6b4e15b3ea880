//! Seeded graph fixtures shared by the benchmarks.

use kdense_core::graph::{complete, identify_vertices};
use kdense_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `G(n, p)` from a fixed seed.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct in-range endpoints");
            }
        }
    }
    g
}

/// Cliques of sizes `sizes`, chained by identifying consecutive blocks at
/// one vertex, so every density level has work to do.
pub fn clique_ladder(sizes: &[usize]) -> Graph {
    let mut g = complete(sizes[0]);
    for &s in &sizes[1..] {
        let at = g.order() - 1;
        g = identify_vertices(&[(&g, at), (&complete(s), 0)])
            .expect("in range")
            .graph;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_reproducible() {
        assert_eq!(gnp(40, 0.3, 7), gnp(40, 0.3, 7));
        let g = clique_ladder(&[3, 4, 5]);
        assert_eq!((g.order(), g.size()), (10, 3 + 6 + 10));
    }
}
