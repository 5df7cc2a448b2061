//! Line-oriented text formats.
//!
//! Edge list: a header `n m`, then `m` lines `u v`. Weight file: lines `v w`;
//! vertices not listed weigh 1. In both, blank lines and lines starting with
//! `#` are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_fields(line: usize, s: &str) -> Result<(&str, &str)> {
    let mut it = s.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(parse_err(line, format!("expected two fields, got {s:?}"))),
    }
}

fn number(line: usize, s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| parse_err(line, format!("{what} {s:?} is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let (n, m) = two_fields(hline, header)?;
    let (n, m) = (number(hline, n, "vertex count")?, number(hline, m, "edge count")?);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, s) in lines {
        let (u, v) = two_fields(line, s)?;
        let (u, v) = (number(line, u, "vertex")?, number(line, v, "vertex")?);
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

/// Header, then edges `u v` with `u < v` in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_weights(text: &str, n: usize) -> Result<WeightMap> {
    let mut weights = vec![1.0; n];
    let mut listed = vec![false; n];
    for (line, s) in content_lines(text) {
        let (v, w) = two_fields(line, s)?;
        let v = number(line, v, "vertex")?;
        if v >= n {
            return Err(parse_err(line, format!("vertex {v} out of range 0..{n}")));
        }
        let w: f64 = w.parse().map_err(|_| parse_err(line, format!("weight {w:?} is not a number")))?;
        if !(w.is_finite() && w >= 0.0) {
            return Err(parse_err(line, format!("weight {w} must be finite and non-negative")));
        }
        if std::mem::replace(&mut listed[v], true) {
            return Err(parse_err(line, format!("vertex {v} listed twice")));
        }
        weights[v] = w;
    }
    WeightMap::new(weights)
}

/// Vertex ids separated by commas and/or whitespace.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut set = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let v: usize =
            tok.parse().map_err(|_| parse_err(1, format!("vertex {tok:?} is not a non-negative integer")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        set.push(v);
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// Integral weights print without a fractional part.
pub fn format_weight(w: f64) -> String {
    if w.fract() == 0.0 && w.abs() < 9.007_199_254_740_992e15 {
        format!("{}", w as i64)
    } else {
        format!("{w}")
    }
}
