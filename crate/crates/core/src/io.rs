//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0-based)
//! ```
//!
//! Self-loops and repeated edges are parse errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::{Edge, EdgeSet, Graph};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize), GraphError> {
    let mut it = s.split_whitespace();
    let bad = |msg: &str| GraphError::Parse {
        line,
        msg: format!("{msg}: {s:?}"),
    };
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut seen = BTreeSet::new();
    for _ in 0..m {
        let (line, s) = lines.next().ok_or_else(|| GraphError::Parse {
            line: text.lines().count().max(1),
            msg: format!("header announces {m} edges, found {}", seen.len()),
        })?;
        let (u, v) = parse_pair(line, s)?;
        let err = |msg: String| GraphError::Parse { line, msg };
        if u >= n || v >= n {
            return Err(err(format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(format!("self-loop at {u}")));
        }
        if !seen.insert(Edge::new(u, v)) {
            return Err(err(format!("duplicate edge {}", Edge::new(u, v))));
        }
    }
    if let Some((line, s)) = lines.next() {
        return Err(GraphError::Parse {
            line,
            msg: format!("unexpected line after {m} edges: {s:?}"),
        });
    }
    Graph::new(n, seen)
}

/// Canonical text form: header then edges in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// Header-less list of `u v` lines, as used for deleted-edge sets.
pub fn parse_pair_list(text: &str) -> Result<EdgeSet, GraphError> {
    let mut set = EdgeSet::new();
    for (line, s) in content_lines(text) {
        let (u, v) = parse_pair(line, s)?;
        if u == v {
            return Err(GraphError::Parse {
                line,
                msg: format!("self-loop at {u}"),
            });
        }
        if !set.insert(Edge::new(u, v)) {
            return Err(GraphError::Parse {
                line,
                msg: format!("duplicate edge {}", Edge::new(u, v)),
            });
        }
    }
    Ok(set)
}

pub fn write_pair_list(f: &EdgeSet) -> String {
    f.iter().fold(String::new(), |mut out, e| {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# a 5-cycle\n5 5\n0 1\n1 2\n# mid\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(g, cycle(5));
    }

    #[test]
    fn round_trips_canonical_text() {
        let text = write_edge_list(&cycle(5));
        assert_eq!(parse_edge_list(&text).unwrap(), cycle(5));
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "",
            "3 1\n0 0\n",
            "3 2\n0 1\n1 0\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0 x\n",
            "3 1\n0 1 2\n",
        ] {
            assert!(parse_edge_list(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn pair_lists() {
        let f = parse_pair_list("# F\n3 1\n0 4\n").unwrap();
        assert_eq!(f.to_string(), "{0-4, 1-3}");
        assert_eq!(write_pair_list(&f), "0 4\n1 3\n");
        assert!(parse_pair_list("1 1\n").is_err());
    }
}
