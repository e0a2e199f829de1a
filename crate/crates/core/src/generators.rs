//! Extremal and structural graph families, plus seeded random C4-free graphs.

use crate::c4::{find_in_rows, find_induced_c4};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use num_rational::Ratio;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use std::fmt;
use std::str::FromStr;

/// Pseudo-random generator behind every seeded construction. Seeds are
/// expanded with `SeedableRng::seed_from_u64`; each candidate edge consumes
/// exactly one `next_u64` in lexicographic pair order.
pub const RNG_NAME: &str = "ChaCha8 (rand_chacha 0.9, seed_from_u64)";

/// The cycle on `4k + 1` vertices with every chord of circular length at
/// most `k`. It is `2k`-regular, C4-free and has clique number `k + 1`.
pub fn cycle_power(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::input("cycle power needs k >= 1"));
    }
    let n = 4 * k + 1;
    let mut edges = Vec::with_capacity(n * k);
    for i in 0..n {
        for step in 1..=k {
            edges.push((i, (i + step) % n));
        }
    }
    Graph::new(n, edges)
}

/// A base graph and one clique size per base vertex. A size of zero deletes
/// the vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionSpec {
    base: Graph,
    sizes: Vec<usize>,
}

impl SubstitutionSpec {
    pub fn new(base: Graph, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != base.n() {
            return Err(Error::input(format!(
                "{} clique sizes given for a base graph on {} vertices",
                sizes.len(),
                base.n()
            )));
        }
        Ok(SubstitutionSpec { base, sizes })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Half-open vertex ranges of each group in the substituted graph.
    pub fn group_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }
}

/// Replaces base vertex `u` by a clique on `sizes[u]` fresh vertices. Groups
/// are laid out contiguously in ascending base-vertex order, and two groups
/// are completely joined iff their base vertices are adjacent.
pub fn clique_substitution(spec: &SubstitutionSpec) -> Result<Graph> {
    if let Some(w) = find_induced_c4(&spec.base) {
        return Err(Error::input(format!(
            "substitution base contains induced C4 {w}"
        )));
    }
    let g = substitute_unchecked(spec);
    debug_assert!(find_induced_c4(&g).is_none());
    Ok(g)
}

fn substitute_unchecked(spec: &SubstitutionSpec) -> Graph {
    let ranges = spec.group_ranges();
    let n: usize = spec.sizes.iter().sum();
    let group_sets: Vec<VertexSet> = ranges
        .iter()
        .map(|r| VertexSet::from_vertices(n, r.clone()))
        .collect();
    let mut rows = Vec::with_capacity(n);
    for (u, range) in ranges.iter().enumerate() {
        let mut row = group_sets[u].clone();
        for w in spec.base.neighbors(u) {
            row.union_with(&group_sets[w]);
        }
        for v in range.clone() {
            let mut r = row.clone();
            r.remove(v);
            rows.push(r);
        }
    }
    Graph::from_rows(rows)
}

/// The 5-wheel: hub `0` joined to the cycle `1-2-3-4-5-1`.
pub fn wheel5() -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
    edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
    Graph::new(6, edges).expect("wheel edges are in range")
}

/// Clique substitution into the 5-wheel. `sizes` is `(hub, v1, ..., v5)`.
pub fn w5_blowup(sizes: [usize; 6]) -> Graph {
    let spec = SubstitutionSpec::new(wheel5(), sizes.to_vec()).expect("six sizes for six vertices");
    substitute_unchecked(&spec)
}

/// Vertex `v` of `g` becomes `perm[v]`. `perm` must be a permutation of `0..n`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Result<Graph> {
    let n = g.n();
    let mut seen = vec![false; n];
    if perm.len() != n
        || perm
            .iter()
            .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
    {
        return Err(Error::input(format!(
            "{perm:?} is not a permutation of 0..{n}"
        )));
    }
    Graph::new(n, g.edges().map(|(u, v)| (perm[u], perm[v])))
}

/// Uniform-ish shuffle of `0..n` (Fisher-Yates with modulo draws).
pub fn seeded_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

/// Edge probability `p = numer / denom` with `0 <= p <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probability(Ratio<u64>);

impl Probability {
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 || numer > denom {
            return Err(Error::input(format!(
                "probability {numer}/{denom} outside [0, 1]"
            )));
        }
        Ok(Probability(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    /// True with probability `p` (up to 2^-64 rounding) for a uniform draw.
    fn accepts(&self, draw: u64) -> bool {
        (draw as u128) * (self.denom() as u128) < (self.numer() as u128) << 64
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Accepts `a/b`, an integer, or a finite decimal such as `0.35`.
impl FromStr for Probability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("cannot parse probability {s:?}"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            return Probability::new(a, b);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
        if frac.len() > 18 || !digits(int) || !digits(frac) || (int.is_empty() && frac.is_empty()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let denom = 10u64.pow(frac.len() as u32);
        let frac_val: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let numer = int
            .checked_mul(denom)
            .and_then(|x| x.checked_add(frac_val))
            .ok_or_else(bad)?;
        Probability::new(numer, denom)
    }
}

fn gnp_rows(n: usize, p: Probability, rng: &mut ChaCha8Rng) -> Vec<VertexSet> {
    let mut rows = vec![VertexSet::empty(n); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if p.accepts(rng.next_u64()) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    rows
}

/// Erdős–Rényi graph `G(n, p)` with no C4 repair.
pub fn random_gnp(n: usize, p: Probability, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_rows(gnp_rows(n, p, &mut rng))
}

/// Edges deleted by the repair loop of [`random_c4free_traced`], in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairTrace {
    pub initial_edges: usize,
    pub removed: Vec<(usize, usize)>,
}

/// Samples `G(n, p)` and then, while an induced C4 `(a, b, c, d)` exists,
/// deletes its edge `ab`. The result is C4-free. This is not a uniform
/// sample of C4-free graphs; dense draws lose many edges.
pub fn random_c4free(n: usize, p: Probability, seed: u64) -> Graph {
    random_c4free_traced(n, p, seed).0
}

pub fn random_c4free_traced(n: usize, p: Probability, seed: u64) -> (Graph, RepairTrace) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = gnp_rows(n, p, &mut rng);
    let initial_edges = rows.iter().map(VertexSet::len).sum::<usize>() / 2;
    let mut removed = Vec::new();
    while let Some(w) = find_in_rows(&rows) {
        let (a, b) = w.first_edge();
        rows[a].remove(b);
        rows[b].remove(a);
        removed.push((a, b));
    }
    (
        Graph::from_rows(rows),
        RepairTrace {
            initial_edges,
            removed,
        },
    )
}
