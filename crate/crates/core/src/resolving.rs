//! Definitional checkers for resolving-type vertex sets.
//!
//! These evaluate the definitions directly and are meant as ground truth for
//! the solver, not as fast paths. Pairs are scanned as `u < v` in ascending
//! order and the `*_violation` variants report the first failing pair.
//!
//! # Panics
//!
//! Every function taking a vertex set panics if the set names a vertex
//! outside `0..g.n()`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed-neighbourhood counts `|N[v] ∩ R|` and which of the tracked counts
/// occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KVertexProfile {
    pub counts: Vec<usize>,
    pub set_size: usize,
    pub has0: bool,
    pub has1: bool,
    pub has_r_minus1: bool,
    pub has_r: bool,
}

pub(crate) fn membership(n: usize, r: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; n];
    for &v in r {
        assert!(v < n, "vertex {v} out of range for a graph on {n} vertices");
        inside[v] = true;
    }
    inside
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn h_with(g: &Graph, inside: &[bool], u: usize, v: usize) -> usize {
    (0..g.n()).filter(|&w| inside[w] && (w == u || w == v || g.has_edge(u, w) != g.has_edge(v, w))).count()
}

/// `|((N(u) △ N(v)) ∪ {u, v}) ∩ R|`.
pub fn h(g: &Graph, r: &[usize], u: usize, v: usize) -> Result<usize> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    for x in [u, v] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    Ok(h_with(g, &membership(g.n(), r), u, v))
}

/// Distances from each member of `r`, in the order of `r`.
fn rows(g: &Graph, r: &[usize]) -> Vec<Vec<Option<u32>>> {
    r.iter().map(|&w| g.bfs_distances(w).expect("member in range").dist).collect()
}

fn resolvers(rows: &[Vec<Option<u32>>], u: usize, v: usize) -> usize {
    rows.iter().filter(|d| d[u] != d[v]).count()
}

/// First pair with fewer than `k` resolvers in `r`.
pub fn k_resolving_violation(g: &Graph, r: &[usize], k: usize) -> Result<Option<(usize, usize)>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let mut set = r.to_vec();
    set.sort_unstable();
    set.dedup();
    membership(g.n(), &set);
    let rows = rows(g, &set);
    Ok(pairs(g.n()).find(|&(u, v)| resolvers(&rows, u, v) < k))
}

pub fn is_k_resolving(g: &Graph, r: &[usize], k: usize) -> Result<bool> {
    Ok(k_resolving_violation(g, r, k)?.is_none())
}

pub fn resolving_violation(g: &Graph, r: &[usize]) -> Option<(usize, usize)> {
    membership(g.n(), r);
    let rows = rows(g, r);
    pairs(g.n()).find(|&(u, v)| resolvers(&rows, u, v) == 0)
}

/// Every pair of distinct vertices differs in distance to some member of `r`.
/// Unreachable compares equal to unreachable.
pub fn is_resolving(g: &Graph, r: &[usize]) -> bool {
    resolving_violation(g, r).is_none()
}

/// A pair left unresolved by `r` minus some member, i.e. one with fewer than
/// two resolvers in `r`.
pub fn fault_tolerance_violation(g: &Graph, r: &[usize]) -> Option<(usize, usize)> {
    k_resolving_violation(g, r, 2).expect("k is positive")
}

/// `r` resolves `g` and keeps doing so after removing any single member.
pub fn is_fault_tolerant(g: &Graph, r: &[usize]) -> bool {
    fault_tolerance_violation(g, r).is_none()
}

pub fn two_nr_violation(g: &Graph, r: &[usize]) -> Option<(usize, usize)> {
    let inside = membership(g.n(), r);
    pairs(g.n()).find(|&(u, v)| h_with(g, &inside, u, v) < 2)
}

/// Every pair has `h >= 2`.
pub fn is_2nr(g: &Graph, r: &[usize]) -> bool {
    two_nr_violation(g, r).is_none()
}

pub fn k_vertex_profile(g: &Graph, r: &[usize]) -> KVertexProfile {
    let inside = membership(g.n(), r);
    let set_size = inside.iter().filter(|&&x| x).count();
    let counts: Vec<usize> =
        (0..g.n()).map(|v| usize::from(inside[v]) + g.neighbors(v).iter().filter(|&&w| inside[w]).count()).collect();
    let has = |k: usize| counts.contains(&k);
    KVertexProfile {
        has0: has(0),
        has1: has(1),
        has_r_minus1: set_size >= 1 && has(set_size - 1),
        has_r: has(set_size),
        counts,
        set_size,
    }
}
