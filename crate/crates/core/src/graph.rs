//! Immutable simple undirected graphs with bit-row adjacency.

use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

/// Outcome of [`Graph::classify_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// Every pair is adjacent. Sets of size at most one are reported here
    /// with `also_independent` set.
    Clique {
        also_independent: bool,
    },
    Independent,
    Neither,
}

impl SetKind {
    pub fn is_clique(self) -> bool {
        matches!(self, SetKind::Clique { .. })
    }

    pub fn is_independent(self) -> bool {
        matches!(
            self,
            SetKind::Independent
                | SetKind::Clique {
                    also_independent: true
                }
        )
    }
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Duplicate pairs collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(rows))
    }

    /// `rows` must already be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let n = rows.len();
        debug_assert!(rows.iter().enumerate().all(|(v, r)| !r.contains(v)));
        let degree_sum: usize = rows.iter().map(VertexSet::len).sum();
        Graph {
            n,
            rows,
            edge_count: degree_sum / 2,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![VertexSet::empty(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        let rows = (0..n)
            .map(|v| {
                let mut r = VertexSet::full(n);
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// The cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::input(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are in range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(VertexSet::len).collect()
    }

    /// δ(G); `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.rows.iter().map(VertexSet::len).min()
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree()?;
        self.rows.iter().all(|r| r.len() == d).then_some(d)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `N(u) ∩ N(v)`. The endpoints are never included since there are no loops.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::input(format!(
                "common_neighbors needs distinct vertices, got {u} twice"
            )));
        }
        Ok(self.rows[u].intersection(&self.rows[v]))
    }

    pub fn classify_set(&self, set: &VertexSet) -> SetKind {
        if set.len() <= 1 {
            return SetKind::Clique {
                also_independent: true,
            };
        }
        let mut any_edge = false;
        let mut any_non_edge = false;
        for v in set {
            let inside = set.intersection_len(&self.rows[v]);
            any_edge |= inside > 0;
            any_non_edge |= inside + 1 < set.len();
            if any_edge && any_non_edge {
                return SetKind::Neither;
            }
        }
        if any_edge {
            SetKind::Clique {
                also_independent: false,
            }
        } else {
            SetKind::Independent
        }
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        self.classify_set(set).is_clique()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.classify_set(set).is_independent()
    }

    pub fn complement(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                let mut c = r.complement();
                c.remove(v);
                c
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// The subgraph induced by `keep`, relabeled to `0..|keep|` in ascending
    /// order. Returns the graph and the new-to-old vertex map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let rows = old
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(
                    old.len(),
                    self.rows[v].intersection(keep).iter().map(|w| new_index[w]),
                )
            })
            .collect();
        (Graph::from_rows(rows), old)
    }

    /// Adds a vertex adjacent to every existing vertex; it gets index `n`.
    pub fn with_universal_vertex(&self) -> Graph {
        let n = self.n + 1;
        let mut rows: Vec<VertexSet> = self
            .rows
            .iter()
            .map(|r| {
                let mut nr = VertexSet::from_vertices(n, r.iter());
                nr.insert(n - 1);
                nr
            })
            .collect();
        let mut last = VertexSet::full(n);
        last.remove(n - 1);
        rows.push(last);
        Graph::from_rows(rows)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::input(format!("vertex {v} outside 0..{}", self.n)))
        }
    }

    /// Validates untrusted vertex indices and collects them into a set.
    pub fn vertex_set(&self, vertices: &[usize]) -> Result<VertexSet> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        Ok(VertexSet::from_vertices(self.n, vertices.iter().copied()))
    }

    pub(crate) fn rows(&self) -> &[VertexSet] {
        &self.rows
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
