//! Plain-text edge list format.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! Endpoints are 0-based. Writing emits edges as `u v` with `u < v` in
//! ascending order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| Error::Parse { line: lineno, message: format!("missing {what}") })?;
        tok.parse()
            .map_err(|_| Error::Parse { line: lineno, message: format!("{what} {tok:?} is not a non-negative integer") })
    };
    let pair = (next("first field")?, next("second field")?);
    if fields.next().is_some() {
        return Err(Error::Parse { line: lineno, message: "expected exactly two fields".into() });
    }
    Ok(pair)
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, message: "missing header".into() })?;
    let (n, m) = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(Error::Parse { line: hline, message: format!("header declares {m} edges, found {}", edges.len()) });
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    write_graph_with_comment(g, None)
}

/// Like [`write_graph`], with each line of `comment` emitted as a `#` line.
pub fn write_graph_with_comment(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    for line in comment.into_iter().flat_map(str::lines) {
        let _ = writeln!(out, "# {line}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_with_comments_and_blank_lines() {
        let g = read_graph("# triangle\n\n3 3\n0 1\n  2 1\n# mid\n0 2\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn writes_normalized() {
        let g = Graph::new(3, &[(2, 1), (1, 0), (0, 2)]).unwrap();
        assert_eq!(write_graph(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(write_graph_with_comment(&g, Some("K3")), "# K3\n3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(read_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_graph("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("3 1\n0 0\n"), Err(Error::SelfLoop(0))));
        assert!(matches!(read_graph("2 1\n0 5\n"), Err(Error::VertexOutOfRange { .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..15, raw in proptest::collection::btree_set((0usize..15, 0usize..15), 0..40)) {
            let edges: std::collections::BTreeSet<(usize, usize)> = raw
                .into_iter()
                .filter(|&(u, v)| u < n && v < n && u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            let edges: Vec<_> = edges.into_iter().collect();
            let g = Graph::new(n, &edges).unwrap();
            let back = read_graph(&write_graph(&g)).unwrap();
            prop_assert_eq!(back.edges().collect::<Vec<_>>(), edges);
            prop_assert_eq!(back, g);
        }
    }
}
