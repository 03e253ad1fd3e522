//! Graph file formats.
//!
//! Edge list (canonical, read and write):
//!
//! ```text
//! # comments start with '#'
//! n m
//! u v      (m lines, 0-based)
//! ```
//!
//! graph6 (read only): one line, optionally preceded by `>>graph6<<`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: malformed header {text:?}, expected \"n m\"")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?}, expected \"u v\"")]
    MalformedEdge { line: usize, text: String },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    IndexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop edge at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("unknown graph format")]
    UnknownFormat,
}

/// Detects the format and parses either an edge list or graph6.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let Some((_, first)) = lines.next() else {
        return Err(ParseError::Empty);
    };
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
        return parse_edge_list(text);
    }
    let g6 = first.strip_prefix(">>graph6<<").unwrap_or(first);
    if tokens.len() == 1 && !g6.is_empty() && g6.bytes().all(|b| (63..=126).contains(&b)) {
        if lines.next().is_some() {
            return Err(ParseError::Graph6("expected a single line".into()));
        }
        return parse_graph6(g6);
    }
    Err(ParseError::UnknownFormat)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let malformed_header = || ParseError::MalformedHeader {
        line: hline,
        text: header.to_string(),
    };
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| malformed_header())?;
    let [n, m] = nums[..] else {
        return Err(malformed_header());
    };
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let pair: Vec<usize> = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| ParseError::MalformedEdge {
                line,
                text: text.to_string(),
            })?;
        let [u, v] = pair[..] else {
            return Err(ParseError::MalformedEdge {
                line,
                text: text.to_string(),
            });
        };
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::IndexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edge_list(n, &edges).map_err(|e| match e {
        GraphError::VertexOutOfRange { vertex, n } => ParseError::IndexOutOfRange { line: 0, vertex, n },
        GraphError::Loop(vertex) => ParseError::Loop { line: 0, vertex },
        GraphError::NotAtDistanceTwo { .. } => unreachable!(),
    })
}

/// Decodes a graph6 string (without trailing newline).
pub fn parse_graph6(s: &str) -> Result<Graph, ParseError> {
    let bytes = s.trim_end().as_bytes();
    let bad = |msg: &str| ParseError::Graph6(msg.to_string());
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(bad("empty string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte size"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte size"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            (n, &rest[3..])
        }
        [b, rest @ ..] => (six(*b), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(ParseError::Graph6(format!(
            "{n} vertices need {need} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| six(body[k / 6]) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("graph6 edges are in range"))
}

/// Canonical edge-list text: header then sorted edges `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_edge_list() {
        let g = parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# a path\n\n3 2 # header\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            parse_graph("3 1\n0 3"),
            Err(ParseError::IndexOutOfRange { line: 2, vertex: 3, n: 3 })
        );
        assert_eq!(parse_graph("3 1\n2 2"), Err(ParseError::Loop { line: 2, vertex: 2 }));
        assert!(matches!(parse_edge_list("3\n0 1"), Err(ParseError::MalformedHeader { .. })));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(ParseError::EdgeCount { expected: 2, found: 1 })));
        assert!(matches!(parse_graph("3 1\n0 x"), Err(ParseError::MalformedEdge { line: 2, .. })));
        assert_eq!(parse_graph("1 2 3"), Err(ParseError::UnknownFormat));
        assert_eq!(parse_graph("# nothing\n"), Err(ParseError::Empty));
    }

    #[test]
    fn graph6_small() {
        let g = parse_graph("DQc").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(parse_graph("?").unwrap().order(), 0);
        assert_eq!(parse_graph(">>graph6<<A_").unwrap().edges(), vec![(0, 1)]);
        assert!(parse_graph6("DQ").is_err());
        assert!(parse_graph6("~?").is_err());
    }
}
