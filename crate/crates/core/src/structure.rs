//! Decomposition of C4-free graphs with independence number at most two.
//!
//! Such a graph either has a bipartite complement (two cliques cover it) or
//! is a clique substitution into the 5-wheel. Both outcomes are returned as a
//! [`StructureCertificate`] that [`verify_certificate`] re-checks edge by
//! edge against the graph.

use crate::c4::find_induced_c4;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{bipartition, find_independent_set_of_size, Bipartition};
use crate::set::VertexSet;
use serde::Serialize;
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum StructureCertificate {
    /// Two cliques of `G` partitioning the vertex set.
    ComplementBipartite { parts: [VertexSet; 2] },
    /// Six cliques partitioning the vertex set. The hub group is complete to
    /// everything; cycle group `i` is complete to groups `i ± 1` and has no
    /// edges to groups `i ± 2` (indices mod 5).
    W5Substitution {
        hub: VertexSet,
        cycle_groups: [VertexSet; 5],
    },
}

impl StructureCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureCertificate::ComplementBipartite { .. } => "ComplementBipartite",
            StructureCertificate::W5Substitution { .. } => "W5Substitution",
        }
    }

    fn labelled_groups(&self) -> Vec<(String, &VertexSet)> {
        match self {
            StructureCertificate::ComplementBipartite { parts } => {
                vec![("P1".to_string(), &parts[0]), ("P2".to_string(), &parts[1])]
            }
            StructureCertificate::W5Substitution { hub, cycle_groups } => {
                let mut v = vec![("hub".to_string(), hub)];
                v.extend(
                    cycle_groups
                        .iter()
                        .enumerate()
                        .map(|(i, q)| (format!("Q{}", i + 1), q)),
                );
                v
            }
        }
    }
}

/// First condition of a certificate found not to hold.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum CertificateViolation {
    #[error("certificate is over {found} vertices but the graph has {expected}")]
    WrongUniverse { expected: usize, found: usize },
    #[error("vertex {vertex} is in no group")]
    Uncovered { vertex: usize },
    #[error("vertex {vertex} is in groups {first} and {second}")]
    Overlap {
        vertex: usize,
        first: String,
        second: String,
    },
    #[error("missing edge {u}-{v} required between {groups}")]
    MissingEdge { u: usize, v: usize, groups: String },
    #[error("edge {u}-{v} present but {groups} must have none")]
    UnexpectedEdge { u: usize, v: usize, groups: String },
}

fn require_complete(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    groups: impl Fn() -> String,
) -> std::result::Result<(), CertificateViolation> {
    for u in a {
        let mut missing = b.difference(g.neighbors(u));
        missing.remove(u);
        if let Some(v) = missing.iter().next() {
            return Err(CertificateViolation::MissingEdge {
                u,
                v,
                groups: groups(),
            });
        }
    }
    Ok(())
}

fn require_empty(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    groups: impl Fn() -> String,
) -> std::result::Result<(), CertificateViolation> {
    for u in a {
        if let Some(v) = b.intersection(g.neighbors(u)).first() {
            return Err(CertificateViolation::UnexpectedEdge {
                u,
                v,
                groups: groups(),
            });
        }
    }
    Ok(())
}

/// Checks every claim of `cert` against the adjacency of `g`, without
/// assuming anything about how the certificate was produced.
pub fn verify_certificate(
    g: &Graph,
    cert: &StructureCertificate,
) -> std::result::Result<(), CertificateViolation> {
    let groups = cert.labelled_groups();
    for (_, set) in &groups {
        if set.universe() != g.n() {
            return Err(CertificateViolation::WrongUniverse {
                expected: g.n(),
                found: set.universe(),
            });
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for (gi, (_, set)) in groups.iter().enumerate() {
        for v in set.iter() {
            if let Some(prev) = owner[v] {
                return Err(CertificateViolation::Overlap {
                    vertex: v,
                    first: groups[prev].0.clone(),
                    second: groups[gi].0.clone(),
                });
            }
            owner[v] = Some(gi);
        }
    }
    if let Some(vertex) = owner.iter().position(Option::is_none) {
        return Err(CertificateViolation::Uncovered { vertex });
    }
    for (label, set) in &groups {
        require_complete(g, set, set, || format!("members of {label}"))?;
    }
    if let StructureCertificate::W5Substitution { hub, cycle_groups } = cert {
        for (i, q) in cycle_groups.iter().enumerate() {
            require_complete(g, hub, q, || format!("hub and Q{}", i + 1))?;
        }
        for i in 0..5 {
            for j in (i + 1)..5 {
                let label = || format!("Q{} and Q{}", i + 1, j + 1);
                let (a, b) = (&cycle_groups[i], &cycle_groups[j]);
                if (j - i) % 5 == 1 || (j - i) % 5 == 4 {
                    require_complete(g, a, b, label)?;
                } else {
                    require_empty(g, a, b, label)?;
                }
            }
        }
    }
    Ok(())
}

/// Decomposes a C4-free graph with α ≤ 2. Neither hypothesis is re-checked
/// up front; inputs violating them surface as [`Error::HypothesisViolated`].
pub fn alpha2_decompose(g: &Graph) -> Result<StructureCertificate> {
    let cert = match bipartition(&g.complement()) {
        Bipartition::Bipartite { first, second } => StructureCertificate::ComplementBipartite {
            parts: [first, second],
        },
        Bipartition::OddCycle(cycle) => w5_groups(g, &cycle)?,
    };
    verify_certificate(g, &cert).map_err(|v| Error::HypothesisViolated(v.to_string()))?;
    Ok(cert)
}

/// `cycle` is an induced odd cycle of the complement.
fn w5_groups(g: &Graph, cycle: &[usize]) -> Result<StructureCertificate> {
    if cycle.len() != 5 {
        return Err(Error::HypothesisViolated(format!(
            "complement has an induced odd cycle of length {} ({:?}), expected 5",
            cycle.len(),
            cycle
        )));
    }
    // Consecutive complement vertices are non-adjacent in G; stepping by two
    // walks the 5-cycle of G.
    let order = [cycle[0], cycle[2], cycle[4], cycle[1], cycle[3]];
    let n = g.n();
    let mut hub = VertexSet::empty(n);
    let mut groups: [VertexSet; 5] =
        std::array::from_fn(|i| VertexSet::from_vertices(n, [order[i]]));
    for v in 0..n {
        if order.contains(&v) {
            continue;
        }
        let mask: u8 = (0..5)
            .filter(|&i| g.has_edge(v, order[i]))
            .fold(0, |m, i| m | 1 << i);
        if mask == 0b11111 {
            hub.insert(v);
            continue;
        }
        let centre = (0..5).find(|&i| {
            let want = (1 << i) | (1 << ((i + 1) % 5)) | (1 << ((i + 4) % 5));
            mask == want
        });
        match centre {
            Some(i) => groups[i].insert(v),
            None => {
                let adjacent: Vec<usize> = (0..5)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| order[i])
                    .collect();
                return Err(Error::HypothesisViolated(format!(
                    "vertex {v} is adjacent to {adjacent:?} on the 5-cycle {order:?}, \
                     neither all five nor three consecutive"
                )));
            }
        }
    }
    let lowest = *cycle.iter().min().expect("five vertices");
    let start = order
        .iter()
        .position(|&v| v == lowest)
        .expect("lowest is on the cycle");
    let min_of = |i: usize| {
        groups[i % 5]
            .first()
            .expect("cycle groups hold a cycle vertex")
    };
    let forward = min_of(start + 1) < min_of(start + 4);
    let index = |j: usize| {
        if forward {
            (start + j) % 5
        } else {
            (start + 5 - j) % 5
        }
    };
    let cycle_groups = std::array::from_fn(|j| groups[index(j)].clone());
    Ok(StructureCertificate::W5Substitution { hub, cycle_groups })
}

/// Checks C4-freeness, then looks for an independent triple. Returns `None`
/// when α ≥ 3, otherwise the decomposition.
pub fn structure_of(g: &Graph) -> Result<Option<StructureCertificate>> {
    if let Some(w) = find_induced_c4(g) {
        return Err(Error::input(format!("graph contains induced C4 {w}")));
    }
    if find_independent_set_of_size(g, 3).is_some() {
        return Ok(None);
    }
    alpha2_decompose(g).map(Some)
}

/// A clique of size at least `⌈2n/5⌉` read off a valid certificate: the
/// larger part, or the best of the five cliques `hub ∪ Qi ∪ Q(i+1)`.
pub fn clique_from_certificate(g: &Graph, cert: &StructureCertificate) -> Result<VertexSet> {
    verify_certificate(g, cert).map_err(|v| Error::input(format!("invalid certificate: {v}")))?;
    let clique = match cert {
        StructureCertificate::ComplementBipartite { parts } => {
            if parts[1].len() > parts[0].len() {
                parts[1].clone()
            } else {
                parts[0].clone()
            }
        }
        StructureCertificate::W5Substitution { hub, cycle_groups } => (0..5)
            .map(|i| {
                hub.union(&cycle_groups[i])
                    .union(&cycle_groups[(i + 1) % 5])
            })
            .fold(None::<VertexSet>, |best, c| match best {
                Some(b) if b.len() >= c.len() => Some(b),
                _ => Some(c),
            })
            .expect("five candidates"),
    };
    if !g.is_clique(&clique) {
        return Err(Error::guarantee(format!(
            "certificate clique {clique:?} is not a clique"
        )));
    }
    if 5 * clique.len() < 2 * g.n() {
        return Err(Error::guarantee(format!(
            "certificate clique has {} vertices, below 2n/5 for n = {}",
            clique.len(),
            g.n()
        )));
    }
    Ok(clique)
}
