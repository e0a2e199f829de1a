//! Certified clique extraction in C4-free graphs.
//!
//! Every extractor returns a [`CliqueCertificate`]: the clique, the lower
//! bound guaranteed on this instance (in exact rational arithmetic), whether
//! the hypothesis holds, and the intermediate sets that justify the answer. Whenever an intermediate step
//! that the proofs say cannot fail does fail, the extractor returns
//! [`Error::GuaranteeViolated`] instead of a certificate.

use crate::c4::find_induced_c4;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{
    find_independent_set_of_size, greedy_maximal_independent_set, max_independent_set_exact,
};
use crate::rational::{self, int, Rational};
use crate::set::VertexSet;
use crate::structure::{
    alpha2_decompose, clique_from_certificate, structure_of, StructureCertificate,
};
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Regular,
    General,
    Triple,
    LargeAlpha,
    Structure,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Regular => "regular",
            Method::General => "general",
            Method::Triple => "triple",
            Method::LargeAlpha => "large-alpha",
            Method::Structure => "structure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCertificate {
    pub method: Method,
    pub clique: VertexSet,
    pub clique_size: usize,
    #[serde(with = "rational::as_string")]
    pub guaranteed_bound: Rational,
    /// The bound is a strict inequality `|clique| > bound`.
    pub strict: bool,
    pub precondition_met: bool,
    /// `|clique|` meets `guaranteed_bound`, evaluated regardless of the
    /// precondition.
    pub bound_satisfied: bool,
    pub witness: Witness,
}

impl CliqueCertificate {
    fn new(
        g: &Graph,
        method: Method,
        clique: VertexSet,
        guaranteed_bound: Rational,
        strict: bool,
        precondition_met: bool,
        witness: Witness,
    ) -> Result<Self> {
        if !g.is_clique(&clique) {
            return Err(Error::guarantee(format!(
                "{method} extractor produced non-clique {clique:?}"
            )));
        }
        let size = clique.len();
        let bound_satisfied = if strict {
            rational::exceeds(size, &guaranteed_bound)
        } else {
            rational::at_least(size, &guaranteed_bound)
        };
        if precondition_met && !bound_satisfied {
            return Err(Error::guarantee(format!(
                "{method} extractor found a clique of size {size}, below the guaranteed {guaranteed_bound}"
            )));
        }
        Ok(CliqueCertificate {
            method,
            clique_size: size,
            clique,
            guaranteed_bound,
            strict,
            precondition_met,
            bound_satisfied,
            witness,
        })
    }

    /// Re-checks the certificate's claims against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let size_ok = if self.strict {
            rational::exceeds(self.clique.len(), &self.guaranteed_bound)
        } else {
            rational::at_least(self.clique.len(), &self.guaranteed_bound)
        };
        self.clique.universe() == g.n()
            && g.is_clique(&self.clique)
            && self.clique_size == self.clique.len()
            && size_ok == self.bound_satisfied
            && (!self.precondition_met || size_ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    DominatingPair(RegularWitness),
    Structure {
        certificate: StructureCertificate,
    },
    General {
        independent_set: VertexSet,
        /// `⌈2n/δ⌉`.
        t: usize,
        /// Swaps `x → b, b'` applied to the greedy set.
        swaps: usize,
        selection: GeneralSelection,
    },
    Triple {
        triple: VertexSet,
        pair: (usize, usize),
    },
    LargeAlpha(Box<LargeAlphaWitness>),
    /// δ = 0, so the bound is zero and any vertex will do.
    Vacuous,
}

/// Sets built from a dominating non-adjacent pair `(u, w)` with common
/// neighbour `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularWitness {
    pub k: usize,
    pub u: usize,
    pub w: usize,
    pub x: usize,
    pub u1: VertexSet,
    pub w1: VertexSet,
    pub u2: VertexSet,
    pub w2: VertexSet,
    /// `V ∖ (U2 ∪ W2)`, covered by the two cliques `U1 + u + x` and `W1 + w + x`.
    pub cover: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum GeneralSelection {
    /// The independent set reached size `t`; the best pairwise
    /// common neighbourhood among its first `t` members.
    PairIntersection { i: usize, j: usize },
    /// The independent set stayed below `t`; a common neighbourhood from
    /// the covering family.
    CoverIntersection { i: usize, j: usize },
    /// `{x} ∪ B_x`, where `B_x` are the vertices whose only neighbour in the
    /// independent set is `x`.
    CoverPrivate { x: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LargeAlphaPreset {
    /// Minimum degree δ, independent set `t ≥ (n² − δ²)/(ε d²) + 1`.
    MinDegree,
    /// Minimum degree at least `n/2`, independent set `t ≥ 3/ε + 1`.
    Dirac,
}

/// Hypothesis values for the large-independent-set extractor. The threshold
/// is written with both a minimum degree δ and a `d`; both are read as δ(G)
/// and both are reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargeAlphaHypothesis {
    pub preset: LargeAlphaPreset,
    pub n: usize,
    pub t: usize,
    pub delta: usize,
    pub d: usize,
    pub d_reading: &'static str,
    #[serde(with = "rational::as_string")]
    pub epsilon: Rational,
    /// `None` when δ = 0 and the threshold is unbounded.
    #[serde(with = "rational::option_as_string")]
    pub threshold: Option<Rational>,
    /// Only set for the Dirac preset: `2δ ≥ n`.
    pub dirac_degree: Option<bool>,
    pub met: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargeAlphaWitness {
    pub independent_set: VertexSet,
    pub pair: Option<(usize, usize)>,
    /// No usable pair, so a single vertex was returned.
    pub fallback: bool,
    pub hypothesis: LargeAlphaHypothesis,
    pub double_count: DegreeSquareCount,
}

/// Degree-square double count over the bipartite incidence between an
/// independent set `S` and `V`, where a vertex `v` has degree `|N(v) ∩ S|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSquareCount {
    /// `Σ_v |N(v) ∩ S|²`, summed vertex by vertex.
    pub sum_degree_squares: u64,
    /// `Σ_i |A_i|` with `A_i = N(x_i)`.
    pub sum_neighborhoods: u64,
    /// `Σ_{i ≠ j} |A_i ∩ A_j|` over ordered pairs.
    pub sum_ordered_intersections: u64,
    /// `t² δ² / n`.
    #[serde(with = "rational::as_string")]
    pub cauchy_schwarz_lower: Rational,
}

impl DegreeSquareCount {
    pub fn identity_holds(&self) -> bool {
        self.sum_degree_squares == self.sum_neighborhoods + self.sum_ordered_intersections
    }

    pub fn cauchy_schwarz_holds(&self) -> bool {
        Rational::from_integer(self.sum_degree_squares as i128) >= self.cauchy_schwarz_lower
    }
}

pub fn degree_square_count(g: &Graph, s: &VertexSet) -> DegreeSquareCount {
    let members = s.to_vec();
    let sum_degree_squares = (0..g.n())
        .map(|v| {
            let d = g.neighbors(v).intersection_len(s) as u64;
            d * d
        })
        .sum();
    let sum_neighborhoods = members.iter().map(|&x| g.degree(x) as u64).sum();
    let mut unordered = 0u64;
    for (a, &xi) in members.iter().enumerate() {
        for &xj in &members[a + 1..] {
            unordered += g.neighbors(xi).intersection_len(g.neighbors(xj)) as u64;
        }
    }
    let t = members.len();
    let delta = g.min_degree().unwrap_or(0);
    let cauchy_schwarz_lower = if g.n() == 0 {
        Rational::zero()
    } else {
        Rational::new((t * t * delta * delta) as i128, g.n() as i128)
    };
    DegreeSquareCount {
        sum_degree_squares,
        sum_neighborhoods,
        sum_ordered_intersections: 2 * unordered,
        cauchy_schwarz_lower,
    }
}

/// Two non-adjacent vertices whose closed neighbourhoods cover the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominatingPair {
    pub u: usize,
    pub w: usize,
}

/// Exhaustive scan over non-adjacent pairs in lexicographic order.
pub fn find_dominating_nonadjacent_pair(g: &Graph) -> Option<DominatingPair> {
    let n = g.n();
    for u in 0..n {
        let mut closed_u = g.neighbors(u).clone();
        closed_u.insert(u);
        for w in (u + 1)..n {
            if g.has_edge(u, w) {
                continue;
            }
            let mut covered = closed_u.union(g.neighbors(w));
            covered.insert(w);
            if covered.len() == n {
                return Some(DominatingPair { u, w });
            }
        }
    }
    None
}

/// A pair of an independent set together with its common neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIntersection {
    pub i: usize,
    pub j: usize,
    pub clique: VertexSet,
}

/// The pair of `s` with the most common neighbours; ties go to the first
/// pair in lexicographic order. In a C4-free graph that common
/// neighbourhood is a clique, and this is checked.
pub fn best_pair_intersection(g: &Graph, s: &VertexSet) -> Result<PairIntersection> {
    if s.len() < 2 {
        return Err(Error::input(format!(
            "need at least two vertices, got {s:?}"
        )));
    }
    if s.universe() != g.n() || !g.is_independent(s) {
        return Err(Error::input(format!(
            "{s:?} is not an independent set of the graph"
        )));
    }
    let members = s.to_vec();
    let mut best: Option<PairIntersection> = None;
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            let common = g.neighbors(i).intersection(g.neighbors(j));
            if best.as_ref().is_none_or(|b| common.len() > b.clique.len()) {
                best = Some(PairIntersection {
                    i,
                    j,
                    clique: common,
                });
            }
        }
    }
    let best = best.expect("at least one pair");
    if !g.is_clique(&best.clique) {
        return Err(Error::input(format!(
            "common neighbourhood of {} and {} is not a clique; the graph is not C4-free",
            best.i, best.j
        )));
    }
    Ok(best)
}

fn require_c4_free(g: &Graph) -> Result<()> {
    match find_induced_c4(g) {
        Some(w) => Err(Error::input(format!("graph contains induced C4 {w}"))),
        None => Ok(()),
    }
}

fn require_nonempty(g: &Graph) -> Result<usize> {
    g.min_degree()
        .ok_or_else(|| Error::input("graph has no vertices"))
}

/// `k` such that `g` has `4k + 1` vertices and is `2k`-regular.
pub fn regular_parameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 5 || !(n - 1).is_multiple_of(4) {
        return None;
    }
    let k = (n - 1) / 4;
    (g.regular_degree() == Some(2 * k)).then_some(k)
}

fn checked_regular_parameter(g: &Graph) -> Result<usize> {
    let k = regular_parameter(g).ok_or_else(|| {
        Error::input(format!(
            "regular extractor needs n = 4k + 1 and a 2k-regular graph (n = {}, degrees {:?}..{:?})",
            g.n(),
            g.min_degree(),
            g.degrees().into_iter().max()
        ))
    })?;
    require_c4_free(g)?;
    Ok(k)
}

/// Clique of size `k + 1` in a `2k`-regular C4-free graph on `4k + 1`
/// vertices. Graphs with α ≤ 2 go through the structure decomposition;
/// otherwise the dominating-pair construction is used.
pub fn extract_regular(g: &Graph) -> Result<CliqueCertificate> {
    let k = checked_regular_parameter(g)?;
    let bound = int(k + 1);
    if let Some(certificate) = structure_of(g)? {
        let clique = clique_from_certificate(g, &certificate)?;
        return CliqueCertificate::new(
            g,
            Method::Structure,
            clique,
            bound,
            false,
            true,
            Witness::Structure { certificate },
        );
    }
    regular_from_pair(g, k)
}

/// The dominating-pair construction alone, without the α ≤ 2 shortcut. It
/// applies whenever such a pair exists.
pub fn extract_regular_via_pair(g: &Graph) -> Result<CliqueCertificate> {
    let k = checked_regular_parameter(g)?;
    regular_from_pair(g, k)
}

fn regular_from_pair(g: &Graph, k: usize) -> Result<CliqueCertificate> {
    let n = g.n();
    let DominatingPair { u, w } = find_dominating_nonadjacent_pair(g).ok_or_else(|| {
        Error::guarantee("no dominating non-adjacent pair in a 2k-regular C4-free graph with α ≥ 3")
    })?;
    let common = g.common_neighbors(u, w)?;
    // The pair dominates and is non-adjacent, so |N(u) ∪ N(w)| = n − 2.
    if g.degree(u) + g.degree(w) - common.len() != n - 2 || 4 * k - common.len() != 4 * k - 1 {
        return Err(Error::guarantee(format!(
            "dominating pair ({u},{w}) has {} common neighbours, expected exactly one",
            common.len()
        )));
    }
    let x = common.first().expect("one common neighbour");
    let mut big_u = g.neighbors(u).clone();
    big_u.remove(x);
    let mut big_w = g.neighbors(w).clone();
    big_w.remove(x);
    let u1 = g.neighbors(x).intersection(&big_u);
    let w1 = g.neighbors(x).intersection(&big_w);
    let u2 = big_u.difference(&u1);
    let w2 = big_w.difference(&w1);
    for (name, set) in [("U1", &u1), ("W1", &w1)] {
        if !g.is_clique(set) {
            return Err(Error::guarantee(format!(
                "{name} = {set:?} does not span a clique"
            )));
        }
    }
    let mut clique_u = u1.clone();
    clique_u.insert(u);
    clique_u.insert(x);
    let mut clique_w = w1.clone();
    clique_w.insert(w);
    clique_w.insert(x);
    let cover = u2.union(&w2).complement();
    let meet = clique_u.intersection(&clique_w);
    if meet != VertexSet::from_vertices(n, [x])
        || clique_u.union(&clique_w) != cover
        || cover.len() != 2 * k + 1
    {
        return Err(Error::guarantee(format!(
            "cover cliques {clique_u:?} and {clique_w:?} do not cover V \\ (U2 ∪ W2) = {cover:?} meeting in {{{x}}}"
        )));
    }
    let clique = if clique_w.len() > clique_u.len() {
        clique_w
    } else {
        clique_u
    };
    let witness = RegularWitness {
        k,
        u,
        w,
        x,
        u1,
        w1,
        u2,
        w2,
        cover,
    };
    CliqueCertificate::new(
        g,
        Method::Regular,
        clique,
        int(k + 1),
        false,
        true,
        Witness::DominatingPair(witness),
    )
}

/// Where the general extractor gets its independent set from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndependentSetSource {
    /// Greedy maximal independent set in ascending vertex order, grown by
    /// swaps until the covering sets are cliques.
    #[default]
    Greedy,
    /// A maximum independent set from the exact oracle.
    Exact { oracle_limit: usize },
}

/// Clique of size at least `δ² / (2n + δ)`.
pub fn extract_general(g: &Graph) -> Result<CliqueCertificate> {
    extract_general_with(g, IndependentSetSource::Greedy)
}

pub fn extract_general_with(g: &Graph, source: IndependentSetSource) -> Result<CliqueCertificate> {
    let delta = require_nonempty(g)?;
    require_c4_free(g)?;
    let n = g.n();
    if delta == 0 {
        let clique = VertexSet::from_vertices(n, [0]);
        return CliqueCertificate::new(
            g,
            Method::General,
            clique,
            Rational::zero(),
            false,
            true,
            Witness::Vacuous,
        );
    }
    let bound = Rational::new((delta * delta) as i128, (2 * n + delta) as i128);
    let t = (2 * n).div_ceil(delta);
    let (s, swaps) = match source {
        IndependentSetSource::Greedy => grow_by_swaps(g, greedy_maximal_independent_set(g), t),
        IndependentSetSource::Exact { oracle_limit } => {
            (max_independent_set_exact(g, oracle_limit)?, 0)
        }
    };
    let (clique, selection) = if s.len() >= t {
        let first_t = VertexSet::from_vertices(n, s.iter().take(t));
        let best = best_pair_intersection(g, &first_t)?;
        (
            best.clique,
            GeneralSelection::PairIntersection {
                i: best.i,
                j: best.j,
            },
        )
    } else {
        general_cover(g, &s)?
    };
    let witness = Witness::General {
        independent_set: s,
        t,
        swaps,
        selection,
    };
    CliqueCertificate::new(g, Method::General, clique, bound, false, true, witness)
}

/// Vertices whose only neighbour in `s` is `x`.
fn private_neighbours(g: &Graph, s: &VertexSet, x: usize) -> VertexSet {
    let mut private = g.neighbors(x).clone();
    for y in s.iter().filter(|&y| y != x) {
        private.difference_with(g.neighbors(y));
    }
    private
}

/// Grows a maximal independent set until it has `t` members or every
/// `{x} ∪ B_x` is a clique. A non-adjacent pair `b, b'` in `B_x` gives the
/// larger independent set `S − x + b + b'`, which is then re-extended in
/// ascending order. Returns the set and the number of swaps.
fn grow_by_swaps(g: &Graph, mut s: VertexSet, t: usize) -> (VertexSet, usize) {
    let mut swaps = 0;
    while s.len() < t {
        let swap = s.iter().find_map(|x| {
            let private = private_neighbours(g, &s, x);
            private.iter().find_map(|b| {
                let mut rest = private.difference(g.neighbors(b));
                rest.remove(b);
                rest.first().map(|b2| (x, b, b2))
            })
        });
        let Some((x, b, b2)) = swap else { break };
        s.remove(x);
        s.insert(b);
        s.insert(b2);
        for v in 0..g.n() {
            if !s.contains(v) && g.neighbors(v).is_disjoint(&s) {
                s.insert(v);
            }
        }
        swaps += 1;
    }
    (s, swaps)
}

/// Pairwise common neighbourhoods and the sets `{x} ∪ B_x` of a swap-free maximal
/// independent set cover `V` with cliques; returns the largest.
fn general_cover(g: &Graph, s: &VertexSet) -> Result<(VertexSet, GeneralSelection)> {
    let n = g.n();
    let members = s.to_vec();
    let mut pieces: Vec<(VertexSet, GeneralSelection)> = Vec::new();
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            let common = g.neighbors(i).intersection(g.neighbors(j));
            pieces.push((common, GeneralSelection::CoverIntersection { i, j }));
        }
    }
    for &x in &members {
        let mut private = private_neighbours(g, s, x);
        private.insert(x);
        pieces.push((private, GeneralSelection::CoverPrivate { x }));
    }
    let mut covered = VertexSet::empty(n);
    for (set, sel) in &pieces {
        if !g.is_clique(set) {
            return Err(Error::guarantee(format!(
                "cover piece {sel:?} = {set:?} is not a clique"
            )));
        }
        covered.union_with(set);
    }
    if covered.len() != n {
        return Err(Error::guarantee(format!(
            "cover pieces miss {:?}; the independent set is not maximal",
            covered.complement()
        )));
    }
    let mut best = 0;
    for (idx, (set, _)) in pieces.iter().enumerate() {
        if set.len() > pieces[best].0.len() {
            best = idx;
        }
    }
    Ok(pieces.swap_remove(best))
}

/// Clique larger than `δ − n/3`, guaranteed when `δ ≤ 11n/15`.
pub fn extract_triple(g: &Graph) -> Result<CliqueCertificate> {
    let delta = require_nonempty(g)?;
    require_c4_free(g)?;
    let n = g.n();
    let bound = int(delta) - Rational::new(n as i128, 3);
    let precondition_met = 15 * delta <= 11 * n;
    match find_independent_set_of_size(g, 3) {
        Some(triple) => {
            let best = best_pair_intersection(g, &triple)?;
            // 3δ ≤ Σ|A_i| ≤ |A_1 ∪ A_2 ∪ A_3| + Σ|A_i ∩ A_j| and the union
            // misses the triple itself, so the strict bound holds outright.
            // Disjoint neighbourhoods leave the pair's intersection empty;
            // a triple vertex stands in.
            let clique = if best.clique.is_empty() {
                VertexSet::from_vertices(n, triple.first())
            } else {
                best.clique
            };
            let witness = Witness::Triple {
                triple,
                pair: (best.i, best.j),
            };
            let cert = CliqueCertificate::new(
                g,
                Method::Triple,
                clique,
                bound,
                true,
                precondition_met,
                witness,
            )?;
            if !cert.bound_satisfied {
                return Err(Error::guarantee("independent-triple count failed"));
            }
            Ok(cert)
        }
        None => {
            let certificate = alpha2_decompose(g).map_err(|e| {
                Error::guarantee(format!("C4-free graph with α ≤ 2 failed to decompose: {e}"))
            })?;
            let clique = clique_from_certificate(g, &certificate)?;
            CliqueCertificate::new(
                g,
                Method::Structure,
                clique,
                bound,
                false,
                precondition_met,
                Witness::Structure { certificate },
            )
        }
    }
}

/// Clique of size at least `(1 − ε) δ² / n` given an independent set of
/// size at least `(n² − δ²)/(ε δ²) + 1`. Runs regardless of the hypothesis
/// and reports whether it held.
pub fn extract_large_alpha(
    g: &Graph,
    s: &VertexSet,
    epsilon: Rational,
) -> Result<CliqueCertificate> {
    large_alpha(g, s, epsilon, LargeAlphaPreset::MinDegree)
}

/// The minimum-degree-`n/2` specialisation: an independent set of size at
/// least `3/ε + 1` gives a clique of size at least `(1 − ε) n / 4`.
pub fn extract_dirac(g: &Graph, s: &VertexSet, epsilon: Rational) -> Result<CliqueCertificate> {
    large_alpha(g, s, epsilon, LargeAlphaPreset::Dirac)
}

fn large_alpha(
    g: &Graph,
    s: &VertexSet,
    epsilon: Rational,
    preset: LargeAlphaPreset,
) -> Result<CliqueCertificate> {
    if !rational::in_open_unit_interval(&epsilon) {
        return Err(Error::input(format!("epsilon {epsilon} outside (0, 1)")));
    }
    let delta = require_nonempty(g)?;
    if s.universe() != g.n() || !g.is_independent(s) {
        return Err(Error::input(format!(
            "{s:?} is not an independent set of the graph"
        )));
    }
    require_c4_free(g)?;
    let n = g.n();
    let t = s.len();
    let one = Rational::one();
    let (threshold, bound, dirac_degree) = match preset {
        LargeAlphaPreset::MinDegree => {
            let threshold = (delta > 0).then(|| {
                Rational::from_integer((n * n - delta * delta) as i128)
                    / (epsilon * int(delta * delta))
                    + one
            });
            let bound = (one - epsilon) * Rational::new((delta * delta) as i128, n as i128);
            (threshold, bound, None)
        }
        LargeAlphaPreset::Dirac => {
            let threshold = Some(int(3) / epsilon + one);
            let bound = (one - epsilon) * Rational::new(n as i128, 4);
            (threshold, bound, Some(2 * delta >= n))
        }
    };
    let met = threshold.as_ref().is_some_and(|th| int(t) >= *th) && dirac_degree.unwrap_or(true);
    let hypothesis = LargeAlphaHypothesis {
        preset,
        n,
        t,
        delta,
        d: delta,
        d_reading: "d = delta (minimum degree)",
        epsilon,
        threshold,
        dirac_degree,
        met,
    };
    let double_count = degree_square_count(g, s);
    let best = if t >= 2 {
        Some(best_pair_intersection(g, s)?)
    } else {
        None
    };
    let usable = best.as_ref().filter(|b| met || !b.clique.is_empty());
    let (clique, pair, fallback) = match usable {
        Some(b) => (b.clique.clone(), Some((b.i, b.j)), false),
        None => {
            let v = s.first().unwrap_or(0);
            (
                VertexSet::from_vertices(n, [v]),
                best.as_ref().map(|b| (b.i, b.j)),
                true,
            )
        }
    };
    let witness = Witness::LargeAlpha(Box::new(LargeAlphaWitness {
        independent_set: s.clone(),
        pair,
        fallback,
        hypothesis,
        double_count,
    }));
    CliqueCertificate::new(g, Method::LargeAlpha, clique, bound, false, met, witness)
}

/// The regular extractor when `g` has `4k + 1` vertices and is
/// `2k`-regular, the general one otherwise.
pub fn extract_auto(g: &Graph) -> Result<CliqueCertificate> {
    if regular_parameter(g).is_some() {
        extract_regular(g)
    } else {
        extract_general(g)
    }
}
