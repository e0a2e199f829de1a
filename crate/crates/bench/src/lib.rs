//! Fixtures shared by the criterion benchmarks.

use c4clique::{random_c4free, Graph, Probability};

/// Seeded C4-free graphs of increasing size.
pub fn random_fixtures(sizes: &[usize], seed: u64) -> Vec<(usize, Graph)> {
    let p = Probability::new(1, 2).expect("valid probability");
    sizes
        .iter()
        .map(|&n| (n, random_c4free(n, p, seed)))
        .collect()
}
