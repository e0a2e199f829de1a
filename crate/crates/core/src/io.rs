//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m lines, 0-indexed)
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write;

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let mut it = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| err(format!("expected {what}, missing {name}")))?;
        tok.parse()
            .map_err(|_| err(format!("{name} {tok:?} is not a non-negative integer")))
    };
    let a = next(if what == "header" { "n" } else { "u" })?;
    let b = next(if what == "header" { "m" } else { "v" })?;
    if let Some(extra) = it.next() {
        return Err(err(format!("unexpected trailing token {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header, header_line, "header")?;
    if n > crate::MAX_VERTICES {
        return Err(Error::Parse {
            line: header_line,
            message: format!("{n} vertices exceeds the limit of {}", crate::MAX_VERTICES),
        });
    }
    let mut edges = Vec::with_capacity(m.min(n * n.saturating_sub(1) / 2));
    for _ in 0..m {
        let (lineno, line) = lines.next().ok_or_else(|| Error::Parse {
            line: text.lines().count().max(1),
            message: format!("header declares {m} edges, found {}", edges.len()),
        })?;
        let (u, v) = parse_pair(line, lineno, "edge")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lineno,
                message: format!("vertex {} out of range 0..{n}", u.max(v)),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("self-loop at {u}"),
            });
        }
        edges.push((u, v));
    }
    if let Some((lineno, line)) = lines.next() {
        return Err(Error::Parse {
            line: lineno,
            message: format!("unexpected content after {m} edges: {line:?}"),
        });
    }
    Graph::new(n, edges)
}

/// Canonical text: the header, then each edge `u v` with `u < v` in
/// ascending order. Round-trips through [`parse_graph`].
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out.pop();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_round_trip() {
        let text = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::cycle(5).unwrap());
        assert_eq!(serialize_graph(&g), "5 5\n0 1\n0 4\n1 2\n2 3\n3 4");
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn single_and_empty() {
        assert_eq!(parse_graph("1 0").unwrap(), Graph::empty(1));
        assert_eq!(serialize_graph(&Graph::empty(0)), "0 0");
        assert_eq!(parse_graph("0 0").unwrap(), Graph::empty(0));
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_graph("# a path\n3 2\n# middle\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("3 1\n0 3"),
            Err(Error::Parse {
                line: 2,
                message: "vertex 3 out of range 0..3".into()
            })
        );
        assert!(matches!(parse_graph("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("3 1\n0 1\n1 2"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n0 1 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("2 1\n1 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("4097 0"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn duplicate_edges_are_accepted_but_not_reemitted() {
        let g = parse_graph("3 2\n0 1\n1 0").unwrap();
        assert_eq!(serialize_graph(&g), "3 1\n0 1");
    }
}
