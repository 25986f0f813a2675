//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! p 4        optional vertex count header
//! 0 1
//! 1 2
//! ```
//!
//! Without a `p` header the vertex count is the largest id plus one.

use std::fmt::Write as _;

use super::Graph;
use crate::error::ParseError;

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["p", n] => {
                if header.is_some() {
                    return Err(ParseError::new(line_no, "repeated `p` header"));
                }
                let n = n
                    .parse()
                    .map_err(|_| ParseError::new(line_no, format!("bad vertex count `{n}`")))?;
                header = Some((n, line_no));
            }
            [u, v] => {
                let parse = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| ParseError::new(line_no, format!("bad vertex id `{t}`")))
                };
                edges.push((parse(u)?, parse(v)?, line_no));
            }
            _ => {
                return Err(ParseError::new(
                    line_no,
                    format!("expected `u v` or `p <n>`, found `{line}`"),
                ))
            }
        }
    }

    let inferred = edges
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let vertex_count = header.map_or(inferred, |(n, _)| n);
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line_no) in &edges {
        if u >= vertex_count || v >= vertex_count {
            return Err(ParseError::new(
                line_no,
                format!("edge {u} {v} exceeds declared vertex count {vertex_count}"),
            ));
        }
        if u == v {
            return Err(ParseError::new(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::new(line_no, format!("duplicate edge {u} {v}")));
        }
    }
    Graph::new(vertex_count, edges.into_iter().map(|(u, v, _)| (u, v)))
        .map_err(|e| ParseError::new(0, e.to_string()))
}

/// Renders `g` with a `p` header followed by its edges in canonical order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {}", g.vertex_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
