//! Seeded instance families for the verification suites.
//!
//! Instance `id` of a corpus seeded with `seed` is drawn from its own ChaCha8
//! stream (`seed_from_u64(seed)` then `set_stream`), so any single instance
//! can be rebuilt without generating the ones before it.

use crate::generators::{
    clique_substitution, random_c4free, relabel, seeded_permutation, w5_blowup, Probability,
    SubstitutionSpec, RNG_NAME,
};
use crate::graph::Graph;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

/// Parameters that rebuild an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GenParams {
    /// `gen random --n n --p p --seed seed`.
    Random {
        n: usize,
        p: String,
        seed: u64,
    },
    /// Clique substitution into a random C4-free base graph.
    Substitution {
        base_n: usize,
        base_p: String,
        base_seed: u64,
        sizes: Vec<usize>,
    },
    /// 5-wheel blow-up `(hub, v1..v5)` with its vertices shuffled.
    W5Blowup {
        sizes: [usize; 6],
        permutation: Vec<usize>,
    },
    /// Complement of a bipartite chain graph: left vertex `i` is joined (in
    /// the bipartite graph) to right vertices `0..thresholds[i]`.
    CoBipartite {
        left: usize,
        right: usize,
        thresholds: Vec<usize>,
        permutation: Vec<usize>,
    },
    /// `G(n, p)` without C4 repair.
    Gnp {
        n: usize,
        p: String,
        seed: u64,
    },
    CyclePower {
        k: usize,
    },
}

#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub id: u64,
    pub params: GenParams,
    pub graph: Graph,
}

/// Stream offsets keeping corpora with the same seed independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Mixed = 0,
    W5 = 1,
    CoBipartite = 2,
    Gnp = 3,
}

pub fn rng_description() -> &'static str {
    RNG_NAME
}

fn instance_rng(seed: u64, stream: Stream, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((stream as u64) << 48) | id);
    rng
}

fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    (rng.next_u64() % bound.max(1) as u64) as usize
}

fn tenths(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> Probability {
    let numer = lo + rng.next_u64() % (hi - lo + 1);
    Probability::new(numer, 10).expect("numerator at most 10")
}

/// Retries per instance before giving up on `accept`.
const MAX_ATTEMPTS: usize = 10_000;

/// The mixed random corpus: half repaired `G(n, p)` draws, half clique
/// substitutions into small random C4-free bases. Draws are repeated on the
/// instance's stream until `accept` holds.
pub fn mixed_instance(
    seed: u64,
    id: u64,
    max_n: usize,
    accept: impl Fn(&Graph) -> bool,
) -> Option<CorpusInstance> {
    let mut rng = instance_rng(seed, Stream::Mixed, id);
    for _ in 0..MAX_ATTEMPTS {
        let (params, graph) = if rng.next_u64().is_multiple_of(2) {
            draw_random(&mut rng, max_n)
        } else {
            draw_substitution(&mut rng, max_n)
        };
        if accept(&graph) {
            return Some(CorpusInstance { id, params, graph });
        }
    }
    None
}

fn draw_random(rng: &mut ChaCha8Rng, max_n: usize) -> (GenParams, Graph) {
    let lo = 4.min(max_n);
    let n = lo + below(rng, max_n - lo + 1);
    let p = tenths(rng, 1, 9);
    let seed = rng.next_u64();
    let g = random_c4free(n, p, seed);
    (
        GenParams::Random {
            n,
            p: p.to_string(),
            seed,
        },
        g,
    )
}

fn draw_substitution(rng: &mut ChaCha8Rng, max_n: usize) -> (GenParams, Graph) {
    let base_n = (3 + below(rng, 8)).min(max_n.max(1));
    let base_p = tenths(rng, 2, 8);
    let base_seed = rng.next_u64();
    let base = random_c4free(base_n, base_p, base_seed);
    let cap = (max_n / base_n).max(1);
    let sizes: Vec<usize> = (0..base_n).map(|_| below(rng, cap + 1)).collect();
    let spec = SubstitutionSpec::new(base, sizes.clone()).expect("one size per base vertex");
    let g = clique_substitution(&spec).expect("repaired bases are C4-free");
    let params = GenParams::Substitution {
        base_n,
        base_p: base_p.to_string(),
        base_seed,
        sizes,
    };
    (params, g)
}

/// A shuffled 5-wheel blow-up on at most `max(max_n, 6)` vertices. Cycle
/// groups are nonempty except with probability 1/10 each, which yields
/// graphs with bipartite complement instead.
pub fn w5_instance(seed: u64, id: u64, max_n: usize) -> CorpusInstance {
    let mut rng = instance_rng(seed, Stream::W5, id);
    let cap = (max_n / 6).max(1);
    let mut sizes = [0usize; 6];
    sizes[0] = below(&mut rng, cap + 1);
    for s in sizes.iter_mut().skip(1) {
        *s = if rng.next_u64().is_multiple_of(10) {
            0
        } else {
            1 + below(&mut rng, cap)
        };
    }
    let g = w5_blowup(sizes);
    let permutation = seeded_permutation(g.n(), &mut rng);
    let graph = relabel(&g, &permutation).expect("seeded permutation");
    CorpusInstance {
        id,
        params: GenParams::W5Blowup { sizes, permutation },
        graph,
    }
}

/// Complement of a shuffled bipartite chain graph. Chain graphs have no
/// induced `2K2`, so the complement is C4-free, and it has α ≤ 2 because
/// its complement is triangle-free.
pub fn co_bipartite_instance(seed: u64, id: u64, max_n: usize) -> CorpusInstance {
    let mut rng = instance_rng(seed, Stream::CoBipartite, id);
    let max_n = max_n.max(2);
    let left = 1 + below(&mut rng, max_n - 1);
    let right = 1 + below(&mut rng, max_n - left);
    let thresholds: Vec<usize> = (0..left).map(|_| below(&mut rng, right + 1)).collect();
    let g = co_chain_graph(left, right, &thresholds);
    let permutation = seeded_permutation(g.n(), &mut rng);
    let graph = relabel(&g, &permutation).expect("seeded permutation");
    CorpusInstance {
        id,
        params: GenParams::CoBipartite {
            left,
            right,
            thresholds,
            permutation,
        },
        graph,
    }
}

/// Left vertices `0..left`, right vertices `left..left + right`.
pub fn co_chain_graph(left: usize, right: usize, thresholds: &[usize]) -> Graph {
    let n = left + right;
    let chain = Graph::new(
        n,
        thresholds
            .iter()
            .enumerate()
            .flat_map(|(i, &t)| (0..t.min(right)).map(move |j| (i, left + j))),
    )
    .expect("chain edges are in range");
    chain.complement()
}

/// Unrepaired `G(n, p)` with `n ≤ max_n`, for cross-checking C4 detectors.
pub fn gnp_instance(seed: u64, id: u64, max_n: usize) -> CorpusInstance {
    let mut rng = instance_rng(seed, Stream::Gnp, id);
    let n = below(&mut rng, max_n + 1);
    let p = tenths(&mut rng, 1, 9);
    let gseed = rng.next_u64();
    CorpusInstance {
        id,
        params: GenParams::Gnp {
            n,
            p: p.to_string(),
            seed: gseed,
        },
        graph: crate::generators::random_gnp(n, p, gseed),
    }
}
