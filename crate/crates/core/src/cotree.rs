//! Union/complement cotrees: recognition, realization, generation and the
//! s-expression text form.
//!
//! Nodes live in one arena and every child precedes its parent, so a plain
//! forward scan over [`Cotree::nodes`] is a post-order traversal.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf(usize),
    Union(NodeId, NodeId),
    Complement(NodeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub kind: NodeKind,
    /// Number of leaves in this node's subtree.
    pub leaves: usize,
}

/// Normalized cotree: binary unions, unary complements, no complement directly
/// below another complement and no complement directly above a leaf. Leaf
/// labels are a permutation of `0..leaf_count()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cotree {
    nodes: Vec<Node>,
    root: NodeId,
}

impl Cotree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn kind(&self, id: NodeId) -> NodeKind {
        self.nodes[id].kind
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes[self.root].leaves
    }

    /// Leaf labels below `id`, left to right.
    pub fn leaves(&self, id: NodeId) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes[id].leaves);
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                NodeKind::Leaf(v) => out.push(v),
                NodeKind::Union(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                NodeKind::Complement(c) => stack.push(c),
            }
        }
        out
    }

    pub fn is_normalized(&self) -> bool {
        self.nodes.iter().all(|node| match node.kind {
            NodeKind::Complement(c) => matches!(self.nodes[c].kind, NodeKind::Union(..)),
            _ => true,
        })
    }

    /// Same tree with a complement added on top if the root is a union, so
    /// the realized graph is connected.
    pub fn into_connected(self) -> Cotree {
        match self.nodes[self.root].kind {
            NodeKind::Union(..) => {
                let mut b = Builder::from_tree(self);
                let root = b.complement(b.nodes.len() - 1);
                b.finish(root)
            }
            _ => self,
        }
    }

    /// The graph of the subtree rooted at `id`, on its leaves renumbered in
    /// ascending label order. Returns the graph and the sorted labels.
    pub fn realize_at(&self, id: NodeId) -> (Graph, Vec<usize>) {
        let mut labels = self.leaves(id);
        labels.sort_unstable();
        let max = labels.last().copied().unwrap_or(0);
        let mut local = vec![usize::MAX; max + 1];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); labels.len()];
        let mut stack = vec![(id, false)];
        while let Some((x, flipped)) = stack.pop() {
            match self.nodes[x].kind {
                NodeKind::Leaf(_) => {}
                NodeKind::Complement(c) => stack.push((c, !flipped)),
                NodeKind::Union(a, b) => {
                    if flipped {
                        let right = self.leaves(b);
                        for l in self.leaves(a) {
                            for &r in &right {
                                adj[local[l]].push(local[r]);
                                adj[local[r]].push(local[l]);
                            }
                        }
                    }
                    stack.push((a, flipped));
                    stack.push((b, flipped));
                }
            }
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        (Graph::from_sorted_adjacency(adj), labels)
    }
}

/// Arena builder applying normalization as nodes are added.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    nodes: Vec<Node>,
}

impl Builder {
    fn from_tree(t: Cotree) -> Self {
        debug_assert_eq!(t.root, t.nodes.len() - 1);
        Builder { nodes: t.nodes }
    }

    pub(crate) fn leaf(&mut self, v: usize) -> NodeId {
        self.push(NodeKind::Leaf(v), 1)
    }

    pub(crate) fn union(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let leaves = self.nodes[a].leaves + self.nodes[b].leaves;
        self.push(NodeKind::Union(a, b), leaves)
    }

    /// Complementing a single vertex is a no-op and two complements cancel.
    pub(crate) fn complement(&mut self, a: NodeId) -> NodeId {
        match self.nodes[a].kind {
            NodeKind::Leaf(_) => a,
            NodeKind::Complement(c) => c,
            NodeKind::Union(..) => {
                let leaves = self.nodes[a].leaves;
                self.push(NodeKind::Complement(a), leaves)
            }
        }
    }

    fn push(&mut self, kind: NodeKind, leaves: usize) -> NodeId {
        self.nodes.push(Node { kind, leaves });
        self.nodes.len() - 1
    }

    /// Keeps only nodes reachable from `root`, renumbered in post-order.
    pub(crate) fn finish(self, root: NodeId) -> Cotree {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                order.push(id);
                continue;
            }
            stack.push((id, true));
            match self.nodes[id].kind {
                NodeKind::Leaf(_) => {}
                NodeKind::Union(a, b) => {
                    stack.push((b, false));
                    stack.push((a, false));
                }
                NodeKind::Complement(c) => stack.push((c, false)),
            }
        }
        let mut remap = vec![usize::MAX; self.nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let nodes = order
            .iter()
            .map(|&old| {
                let node = self.nodes[old];
                let kind = match node.kind {
                    NodeKind::Leaf(v) => NodeKind::Leaf(v),
                    NodeKind::Union(a, b) => NodeKind::Union(remap[a], remap[b]),
                    NodeKind::Complement(c) => NodeKind::Complement(remap[c]),
                };
                Node { kind, leaves: node.leaves }
            })
            .collect::<Vec<_>>();
        Cotree { root: nodes.len() - 1, nodes }
    }
}

/// Recognizes a cograph and returns its cotree.
///
/// Disconnected graphs become a left-deep chain of unions over their
/// components (ascending smallest vertex); connected graphs are complemented
/// and split again. A connected graph with a connected complement contains an
/// induced P4 and is rejected.
pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut b = Builder::default();
    let ids: Vec<usize> = (0..g.n()).collect();
    let root = build_rec(g, &ids, false, &mut b)?;
    Ok(b.finish(root))
}

/// `flipped`: `g` is an induced subgraph of the input's complement.
fn build_rec(g: &Graph, ids: &[usize], flipped: bool, b: &mut Builder) -> Result<NodeId> {
    if g.n() == 1 {
        return Ok(b.leaf(ids[0]));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return union_chain(g, ids, comps, flipped, b);
    }
    let co = g.complement();
    let co_comps = co.connected_components();
    if co_comps.len() == 1 {
        // the complement of a - b - c - d is b - d - a - c
        let witness = find_induced_p4(g)
            .map(|[p, q, r, s]| if flipped { [q, s, p, r] } else { [p, q, r, s] })
            .map(|w| w.map(|x| ids[x]));
        return Err(Error::NotCograph { witness });
    }
    let u = union_chain(&co, ids, co_comps, !flipped, b)?;
    Ok(b.complement(u))
}

fn union_chain(g: &Graph, ids: &[usize], comps: Vec<Vec<usize>>, flipped: bool, b: &mut Builder) -> Result<NodeId> {
    let mut acc = None;
    for comp in comps {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let sub_ids: Vec<usize> = map.new_to_old.iter().map(|&i| ids[i]).collect();
        let node = build_rec(&sub, &sub_ids, flipped, b)?;
        acc = Some(match acc {
            None => node,
            Some(prev) => b.union(prev, node),
        });
    }
    acc.ok_or(Error::Internal("union over zero components"))
}

/// Some induced path `a - b - c - d`, if the graph has one.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
        for &a in g.neighbors(b) {
            if a == c || g.has_edge(a, c) {
                continue;
            }
            for &d in g.neighbors(c) {
                if d != b && d != a && !g.has_edge(d, b) && !g.has_edge(a, d) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Realizes a cotree as a graph whose vertex ids are the leaf labels.
pub fn realize(t: &Cotree) -> Graph {
    t.realize_at(t.root).0
}

/// Seeded random cotree on `n` leaves labelled `0..n` left to right.
///
/// Each union splits its leaves at a uniform point and is wrapped in a
/// complement with probability 1/2.
pub fn random_cotree(n: usize, seed: u64) -> Result<Cotree> {
    if n == 0 {
        return Err(Error::EmptyCotree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder::default();
    let root = random_rec(0, n, &mut rng, &mut b);
    Ok(b.finish(root))
}

fn random_rec(first: usize, n: usize, rng: &mut ChaCha8Rng, b: &mut Builder) -> NodeId {
    if n == 1 {
        return b.leaf(first);
    }
    let k = rng.gen_range(1..n);
    let left = random_rec(first, k, rng, b);
    let right = random_rec(first + k, n - k, rng, b);
    let u = b.union(left, right);
    if rng.gen_bool(0.5) {
        b.complement(u)
    } else {
        u
    }
}

/// Every normalized cotree on `n` leaves labelled `0..n` left to right: all
/// binary shapes, each union optionally complemented.
pub fn all_cotrees(n: usize) -> Vec<Cotree> {
    #[derive(Clone)]
    enum Expr {
        Leaf(usize),
        Union(Box<Expr>, Box<Expr>, bool),
    }

    fn shapes(first: usize, n: usize) -> Vec<Expr> {
        if n == 1 {
            return vec![Expr::Leaf(first)];
        }
        let mut out = Vec::new();
        for k in 1..n {
            let lefts = shapes(first, k);
            let rights = shapes(first + k, n - k);
            for l in &lefts {
                for r in &rights {
                    for flip in [false, true] {
                        out.push(Expr::Union(Box::new(l.clone()), Box::new(r.clone()), flip));
                    }
                }
            }
        }
        out
    }

    fn emit(e: &Expr, b: &mut Builder) -> NodeId {
        match e {
            Expr::Leaf(v) => b.leaf(*v),
            Expr::Union(l, r, flip) => {
                let (l, r) = (emit(l, b), emit(r, b));
                let u = b.union(l, r);
                if *flip {
                    b.complement(u)
                } else {
                    u
                }
            }
        }
    }

    if n == 0 {
        return Vec::new();
    }
    shapes(0, n)
        .iter()
        .map(|e| {
            let mut b = Builder::default();
            let root = emit(e, &mut b);
            b.finish(root)
        })
        .collect()
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Step {
            Node(NodeId),
            Text(&'static str),
        }
        let mut stack = vec![Step::Node(self.root)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Text(s) => f.write_str(s)?,
                Step::Node(id) => match self.nodes[id].kind {
                    NodeKind::Leaf(v) => write!(f, "L{v}")?,
                    NodeKind::Union(a, b) => {
                        f.write_str("(U ")?;
                        stack.extend([Step::Text(")"), Step::Node(b), Step::Text(" "), Step::Node(a)]);
                    }
                    NodeKind::Complement(c) => {
                        f.write_str("(C ")?;
                        stack.extend([Step::Text(")"), Step::Node(c)]);
                    }
                },
            }
        }
        Ok(())
    }
}

impl FromStr for Cotree {
    type Err = Error;

    /// Parses `L<id> | (U t t) | (C t)`. Redundant complements are
    /// normalized away; leaf labels must form `0..n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidCotree(msg);
        let mut tokens = Vec::new();
        let mut word = String::new();
        for ch in s.chars() {
            if ch == '(' || ch == ')' || ch.is_whitespace() {
                if !word.is_empty() {
                    tokens.push(std::mem::take(&mut word));
                }
                if !ch.is_whitespace() {
                    tokens.push(ch.to_string());
                }
            } else {
                word.push(ch);
            }
        }
        if !word.is_empty() {
            tokens.push(word);
        }

        struct Frame {
            op: char,
            children: Vec<NodeId>,
        }
        let mut b = Builder::default();
        let mut frames: Vec<Frame> = Vec::new();
        let mut root = None;
        let mut iter = tokens.into_iter();
        while let Some(tok) = iter.next() {
            let finished = match tok.as_str() {
                "(" => {
                    let op = match iter.next().as_deref() {
                        Some("U") => 'U',
                        Some("C") => 'C',
                        other => return Err(bad(format!("expected U or C after '(', got {other:?}"))),
                    };
                    frames.push(Frame { op, children: Vec::new() });
                    continue;
                }
                ")" => {
                    let frame = frames.pop().ok_or_else(|| bad("unbalanced ')'".into()))?;
                    match (frame.op, frame.children.as_slice()) {
                        ('U', &[l, r]) => b.union(l, r),
                        ('C', &[c]) => b.complement(c),
                        (op, ch) => {
                            return Err(bad(format!("node {op} has {} children", ch.len())));
                        }
                    }
                }
                leaf => {
                    let id = leaf
                        .strip_prefix('L')
                        .and_then(|d| d.parse::<usize>().ok())
                        .ok_or_else(|| bad(format!("unexpected token {leaf:?}")))?;
                    b.leaf(id)
                }
            };
            match frames.last_mut() {
                Some(frame) => frame.children.push(finished),
                None if root.is_none() => root = Some(finished),
                None => return Err(bad("trailing input after cotree".into())),
            }
        }
        if !frames.is_empty() {
            return Err(bad("unbalanced '('".into()));
        }
        let root = root.ok_or(Error::EmptyCotree)?;
        let t = b.finish(root);
        let mut labels = t.leaves(t.root);
        labels.sort_unstable();
        if labels.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(bad("leaf labels must be exactly 0..n, each once".into()));
        }
        Ok(t)
    }
}
