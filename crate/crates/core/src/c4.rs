//! Induced 4-cycle detection.

use crate::graph::Graph;
use crate::set::VertexSet;
use serde::Serialize;

/// Four vertices `(a, b, c, d)` with edges `ab, bc, cd, da` and non-edges
/// `ac, bd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FoundC4 {
    pub vertices: [usize; 4],
}

impl FoundC4 {
    /// Checks the four adjacencies and two non-adjacencies against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.vertices;
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && g.has_edge(d, a)
            && !g.has_edge(a, c)
            && !g.has_edge(b, d)
    }

    /// The edge a repair step removes: `(a, b)`.
    pub fn first_edge(&self) -> (usize, usize) {
        (self.vertices[0], self.vertices[1])
    }
}

impl std::fmt::Display for FoundC4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.vertices;
        write!(f, "{a}-{b}-{c}-{d}-{a}")
    }
}

/// Pair-scan detection: for each non-adjacent pair `(u, v)` in lexicographic
/// order, look for a non-adjacent pair `(p, q)` inside `N(u) ∩ N(v)`. The
/// first hit is returned as `(u, p, v, q)`.
pub fn find_induced_c4(g: &Graph) -> Option<FoundC4> {
    find_in_rows(g.rows())
}

pub(crate) fn find_in_rows(rows: &[VertexSet]) -> Option<FoundC4> {
    scan_from(rows, 0)
}

/// Same scan, starting at first vertex `start_u`. Pairs with a smaller first
/// vertex are skipped.
pub(crate) fn scan_from(rows: &[VertexSet], start_u: usize) -> Option<FoundC4> {
    let n = rows.len();
    for u in start_u..n {
        let ru = &rows[u];
        // Candidates v > u, non-adjacent to u, with at least two common neighbours.
        for v in (u + 1)..n {
            if ru.contains(v) {
                continue;
            }
            let common = ru.intersection(&rows[v]);
            if common.len() < 2 {
                continue;
            }
            for p in &common {
                let mut rest = common.difference(&rows[p]);
                rest.remove(p);
                if let Some(q) = rest.iter().find(|&q| q > p) {
                    return Some(FoundC4 {
                        vertices: [u, p, v, q],
                    });
                }
            }
        }
    }
    None
}

pub fn is_c4_free(g: &Graph) -> bool {
    find_induced_c4(g).is_none()
}

/// Reference detector: enumerates every 4-subset `a < b < c < d` and tests the
/// three ways to close it into a 4-cycle. Exponentially slower than
/// [`find_induced_c4`]; kept as an independent check of it.
pub fn naive_find_induced_c4(g: &Graph) -> Option<FoundC4> {
    let n = g.n();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let candidates = [[a, b, c, d], [a, b, d, c], [a, c, b, d]];
                    for cyc in candidates {
                        let w = FoundC4 { vertices: cyc };
                        if w.holds_in(g) {
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}
