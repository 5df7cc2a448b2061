//! Simple undirected graphs on dense vertex ids `0..n`, plus vertex weights.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists.
///
/// Vertex ids are exactly `0..n`. Adjacency is symmetric and loop-free; every
/// constructor enforces this, and no method mutates a built graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Shortest-path distances from one source. `None` marks a vertex in another
/// connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
}

/// Mapping produced by [`Graph::induced_subgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMap {
    /// `old_to_new[v]` is the id of `v` in the subgraph, if it was kept.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[i]` is the original id of subgraph vertex `i`.
    pub new_to_old: Vec<usize>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        Graph { adj: (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect() }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from symmetric adjacency lists without re-validating
    /// them. Lists must already be sorted, duplicate free and loop free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, nbrs)| {
            nbrs.windows(2).all(|w| w[0] < w[1]) && nbrs.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())
        }));
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Dense adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        let mut m = vec![vec![false; n]; n];
        for (u, v) in self.edges() {
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut out = Vec::with_capacity(n - 1 - self.adj[u].len());
                let mut it = self.adj[u].iter().peekable();
                for v in 0..n {
                    if it.peek() == Some(&&v) {
                        it.next();
                    } else if v != u {
                        out.push(v);
                    }
                }
                out
            })
            .collect();
        Graph { adj }
    }

    /// Vertex-disjoint union: `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()));
        Graph { adj }
    }

    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow> {
        let n = self.n();
        if source >= n {
            return Err(Error::VertexOutOfRange { vertex: source, n });
        }
        let mut dist = vec![None; n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    queue.push_back(v);
                }
            }
        }
        Ok(DistanceRow { source, dist })
    }

    /// All-pairs distances by one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.n()).map(|s| self.bfs_distances(s).expect("source in range").dist).collect()
    }

    /// Connected components, each sorted, listed by ascending smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `vertices`, renumbered in ascending order of the
    /// original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, IdMap)> {
        let n = self.n();
        let mut new_to_old = vertices.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let mut old_to_new = vec![None; n];
        for (i, &v) in new_to_old.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            old_to_new[v] = Some(i);
        }
        let adj = new_to_old.iter().map(|&u| self.adj[u].iter().filter_map(|&v| old_to_new[v]).collect()).collect();
        Ok((Graph { adj }, IdMap { old_to_new, new_to_old }))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Non-negative, finite weight per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMap(Vec<f64>);

impl WeightMap {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some((vertex, &weight)) = weights.iter().enumerate().find(|(_, w)| !(w.is_finite() && **w >= 0.0)) {
            return Err(Error::InvalidWeight { vertex, weight });
        }
        Ok(WeightMap(weights))
    }

    /// Every vertex weighs 1.
    pub fn uniform(n: usize) -> Self {
        WeightMap(vec![1.0; n])
    }

    #[inline]
    pub fn get(&self, v: usize) -> f64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Sum over `set`, added in the order given.
    pub fn total(&self, set: &[usize]) -> f64 {
        set.iter().map(|&v| self.0[v]).sum()
    }

    /// Weights of `vertices`, in that order.
    pub fn restrict(&self, vertices: &[usize]) -> WeightMap {
        WeightMap(vertices.iter().map(|&v| self.0[v]).collect())
    }

    pub(crate) fn check_len(&self, vertices: usize) -> Result<()> {
        if self.len() == vertices {
            Ok(())
        } else {
            Err(Error::WeightCountMismatch { weights: self.len(), vertices })
        }
    }
}
