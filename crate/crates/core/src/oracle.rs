//! Exact search routines used as ground truth, and the independent-set
//! helpers the extractors build on.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use std::collections::VecDeque;

/// Largest graph the exponential oracles accept unless told otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 48;

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::OracleLimit { n: g.n(), limit })
    } else {
        Ok(())
    }
}

/// Maximum clique by branch and bound with a greedy-colouring bound. Among
/// all maximum cliques the lexicographically least one is returned.
pub fn max_clique_exact(g: &Graph, limit: usize) -> Result<VertexSet> {
    check_limit(g, limit)?;
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, g.all_vertices(), &mut best);
    Ok(VertexSet::from_vertices(g.n(), best))
}

/// Maximum independent set: the lexicographically least maximum clique of
/// the complement.
pub fn max_independent_set_exact(g: &Graph, limit: usize) -> Result<VertexSet> {
    check_limit(g, limit)?;
    max_clique_exact(&g.complement(), limit)
}

/// Upper bound on the clique number of `g[cand]` from a greedy colouring.
fn colour_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut uncoloured = cand.clone();
    let mut colours = 0;
    while !uncoloured.is_empty() {
        colours += 1;
        let mut available = uncoloured.clone();
        while let Some(v) = available.first() {
            uncoloured.remove(v);
            available.remove(v);
            available.difference_with(g.neighbors(v));
        }
    }
    colours
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut cand: VertexSet, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            best.clone_from(current);
        }
        return;
    }
    if current.len() + colour_bound(g, &cand) <= best.len() {
        return;
    }
    while let Some(v) = cand.first() {
        if current.len() + cand.len() <= best.len() {
            return;
        }
        let next = cand.intersection(g.neighbors(v));
        current.push(v);
        expand(g, current, next, best);
        current.pop();
        cand.remove(v);
    }
}

/// Scans vertices in ascending order and keeps each one that has no
/// neighbour already kept. The result is a maximal independent set.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut chosen = VertexSet::empty(g.n());
    let mut blocked = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if !blocked.contains(v) {
            chosen.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    chosen
}

/// Lexicographically least independent set of exactly `t` vertices, if any.
pub fn find_independent_set_of_size(g: &Graph, t: usize) -> Option<VertexSet> {
    if t == 0 {
        return Some(VertexSet::empty(g.n()));
    }
    if t > g.n() {
        return None;
    }
    let mut current = Vec::with_capacity(t);
    let found = independent_dfs(g, t, &mut current, g.all_vertices());
    found.then(|| VertexSet::from_vertices(g.n(), current))
}

fn independent_dfs(g: &Graph, t: usize, current: &mut Vec<usize>, mut cand: VertexSet) -> bool {
    if current.len() == t {
        return true;
    }
    while let Some(v) = cand.first() {
        if current.len() + cand.len() < t {
            return false;
        }
        cand.remove(v);
        let next = cand.difference(g.neighbors(v));
        current.push(v);
        if independent_dfs(g, t, current, next) {
            return true;
        }
        current.pop();
    }
    false
}

/// Result of 2-colouring a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Colour classes; each component's lowest vertex goes to the first part.
    Bipartite { first: VertexSet, second: VertexSet },
    /// An induced (chordless) odd cycle, starting at its lowest vertex and
    /// oriented so the second vertex is lower than the last.
    OddCycle(Vec<usize>),
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let cx = colour[x].expect("queued vertices are coloured");
            for y in g.neighbors(x) {
                match colour[y] {
                    None => {
                        colour[y] = Some(!cx);
                        parent[y] = x;
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => {
                        let cycle = tree_cycle(&parent, x, y);
                        return Bipartition::OddCycle(normalize_cycle(shorten_to_induced(
                            g, cycle,
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let first = VertexSet::from_vertices(n, (0..n).filter(|&v| colour[v] == Some(false)));
    let second = first.complement();
    Bipartition::Bipartite { first, second }
}

/// Closes the BFS-tree paths from `x` and `y` to their lowest common
/// ancestor with the edge `xy`.
fn tree_cycle(parent: &[usize], x: usize, y: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let px = path_to_root(x);
    let py = path_to_root(y);
    // Trim the shared suffix, keeping the common ancestor once.
    let mut i = px.len();
    let mut j = py.len();
    while i > 1 && j > 1 && px[i - 2] == py[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = px[..i].to_vec();
    cycle.extend(py[..j - 1].iter().rev());
    cycle
}

/// Repeatedly splits an odd cycle along a chord, keeping the odd half, until
/// no chord remains.
fn shorten_to_induced(g: &Graph, mut cycle: Vec<usize>) -> Vec<usize> {
    'outer: loop {
        let len = cycle.len();
        for i in 0..len {
            for j in (i + 2)..len {
                if i == 0 && j == len - 1 {
                    continue;
                }
                if g.has_edge(cycle[i], cycle[j]) {
                    let inner = j - i + 1;
                    cycle = if inner % 2 == 1 {
                        cycle[i..=j].to_vec()
                    } else {
                        let mut c = cycle[j..].to_vec();
                        c.extend_from_slice(&cycle[..=i]);
                        c
                    };
                    continue 'outer;
                }
            }
        }
        return cycle;
    }
}

fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let len = cycle.len();
    let (pos, _) = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .expect("cycles are nonempty");
    cycle.rotate_left(pos);
    if len > 2 && cycle[1] > cycle[len - 1] {
        cycle[1..].reverse();
    }
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle_power;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(
            max_clique_exact(&Graph::complete(5), 48).unwrap().to_vec(),
            vec![0, 1, 2, 3, 4]
        );
        let c9 = cycle_power(2).unwrap();
        assert_eq!(max_clique_exact(&c9, 48).unwrap().to_vec(), vec![0, 1, 2]);
        let w5 = crate::generators::wheel5();
        assert_eq!(max_clique_exact(&w5, 48).unwrap().len(), 3);
        assert_eq!(max_clique_exact(&Graph::empty(0), 48).unwrap().len(), 0);
        assert_eq!(
            max_clique_exact(&Graph::empty(3), 48).unwrap().to_vec(),
            vec![0]
        );
    }

    #[test]
    fn oracle_limit_is_enforced() {
        let g = Graph::empty(49);
        assert_eq!(
            max_clique_exact(&g, DEFAULT_ORACLE_LIMIT),
            Err(Error::OracleLimit { n: 49, limit: 48 })
        );
        assert!(max_independent_set_exact(&g, 48).is_err());
        assert!(max_clique_exact(&g, 60).is_ok());
    }

    #[test]
    fn max_independent_examples() {
        assert_eq!(
            max_independent_set_exact(&Graph::cycle(5).unwrap(), 48)
                .unwrap()
                .to_vec(),
            vec![0, 2]
        );
        assert_eq!(
            max_independent_set_exact(&Graph::complete(4), 48)
                .unwrap()
                .to_vec(),
            vec![0]
        );
        let c9 = cycle_power(2).unwrap();
        assert_eq!(
            max_independent_set_exact(&c9, 48).unwrap().to_vec(),
            vec![0, 3, 6]
        );
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(
            greedy_maximal_independent_set(&Graph::cycle(5).unwrap()).to_vec(),
            vec![0, 2]
        );
        assert_eq!(
            greedy_maximal_independent_set(&Graph::empty(4)).to_vec(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            greedy_maximal_independent_set(&Graph::complete(4)).to_vec(),
            vec![0]
        );
    }

    #[test]
    fn independent_set_of_size_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            find_independent_set_of_size(&c5, 2).unwrap().to_vec(),
            vec![0, 2]
        );
        assert_eq!(find_independent_set_of_size(&c5, 3), None);
        let c9 = cycle_power(2).unwrap();
        assert_eq!(
            find_independent_set_of_size(&c9, 3).unwrap().to_vec(),
            vec![0, 3, 6]
        );
        assert_eq!(find_independent_set_of_size(&c9, 4), None);
    }

    #[test]
    fn bipartition_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            bipartition(&c6),
            Bipartition::Bipartite {
                first: set(6, &[0, 2, 4]),
                second: set(6, &[1, 3, 5])
            }
        );
        assert_eq!(
            bipartition(&Graph::cycle(5).unwrap()),
            Bipartition::OddCycle(vec![0, 1, 2, 3, 4])
        );
        assert_eq!(
            bipartition(&Graph::path(4)),
            Bipartition::Bipartite {
                first: set(4, &[0, 2]),
                second: set(4, &[1, 3])
            }
        );
        assert_eq!(
            bipartition(&Graph::complete(3)),
            Bipartition::OddCycle(vec![0, 1, 2])
        );
    }

    #[test]
    fn odd_cycle_witness_is_induced() {
        // C7 with chord 0-3 leaves the odd part 0-3-4-5-6.
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 3));
        let g = Graph::new(7, edges).unwrap();
        match bipartition(&g) {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.len() % 2, 1);
                let s = VertexSet::from_vertices(7, c.iter().copied());
                let (h, _) = g.induced_subgraph(&s);
                assert_eq!(h.regular_degree(), Some(2));
                assert_eq!(h.edge_count(), c.len());
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }
}
