//! Plain-text edge-list and arc-list files.
//!
//! ```text
//! # comment
//! 4
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line is the vertex count, every later line one pair.
//! Writers sort by `(min, max)` endpoint and terminate every line with `\n`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;

struct Header {
    vertex_count: usize,
    pairs: Vec<(usize, (usize, usize))>,
}

fn parse_pairs(text: &str) -> Result<Header> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(Error::Format {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    let vertex_count = first.parse::<usize>().map_err(|_| Error::Format {
        line,
        message: format!("expected a vertex count, found `{first}`"),
    })?;
    let mut pairs = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Format {
                line,
                message: format!("`{t}` is not a vertex index"),
            })
        };
        if fields.len() != 2 {
            return Err(Error::Format {
                line,
                message: format!("expected `u v`, found `{l}`"),
            });
        }
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u >= vertex_count || v >= vertex_count {
            return Err(Error::Format {
                line,
                message: format!("vertex out of range 0..{vertex_count}"),
            });
        }
        if u == v {
            return Err(Error::Format {
                line,
                message: format!("self-loop at {u}"),
            });
        }
        pairs.push((line, (u, v)));
    }
    Ok(Header { vertex_count, pairs })
}

/// Parses an edge-list document.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let header = parse_pairs(text)?;
    let mut seen = BTreeSet::new();
    for &(line, (u, v)) in &header.pairs {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Format {
                line,
                message: format!("duplicate edge {u} {v}"),
            });
        }
    }
    Ok(Graph::from_edge_set(header.vertex_count, seen))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses an arc-list document against `graph`; the arcs must cover every
/// edge exactly once.
pub fn read_orientation(graph: &Graph, text: &str) -> Result<Orientation> {
    let header = parse_pairs(text)?;
    if header.vertex_count != graph.vertex_count() {
        return Err(Error::Format {
            line: 0,
            message: format!(
                "orientation declares {} vertices, graph has {}",
                header.vertex_count,
                graph.vertex_count()
            ),
        });
    }
    let arcs: Vec<(usize, usize)> = header.pairs.into_iter().map(|(_, p)| p).collect();
    Orientation::new(graph.clone(), &arcs)
}

/// Arcs in edge order, one `tail head` line each.
pub fn write_orientation(o: &Orientation) -> String {
    let mut out = format!("{}\n", o.graph().vertex_count());
    for (u, v) in o.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
