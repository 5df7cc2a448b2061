//! Minimum-weight 2-neighbourhood-resolving sets by dynamic programming over a
//! cotree, and the fault-tolerant metric dimension built on top of it.
//!
//! Every cotree node gets a [`StateTable`]: for each reachable [`Signature`]
//! the cheapest set `R` on that node's subgraph with `h(u, v) >= 2` for all
//! pairs, plus a backpointer. Complement nodes relabel signatures, union nodes
//! combine all compatible pairs of child entries. Tables have at most
//! [`Signature::KEYS`] entries, so each node costs constant work.
//!
//! On a connected cograph the cheapest entry at the root is a minimum-weight
//! fault-tolerant resolving set. [`solve`] handles disconnected input per
//! component, adding isolated vertices only when there are at least two.

mod signature;
pub mod sixteen;

pub use signature::{flag, Signature, SizeClass, StateIndex};

use std::borrow::Cow;
use std::fmt;

use crate::cotree::{build_cotree, Cotree, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};
use crate::resolving::is_fault_tolerant;

/// How an entry's set was assembled from the child tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Leaf {
        taken: bool,
    },
    /// Entry positions in the left and right child tables.
    Union {
        left: u16,
        right: u16,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry {
    pub signature: Signature,
    pub weight: f64,
    pub origin: Origin,
}

/// Feasible entries of one node, at most one per signature. Missing
/// signatures are infeasible.
///
/// Entry order is deterministic and is the tie-break order. A complement
/// node's table lists the same sets as its child at the same positions.
#[derive(Clone, PartialEq, Default)]
pub struct StateTable {
    entries: Vec<Entry>,
}

impl StateTable {
    /// Table of a single vertex: position 0 leaves it out, position 1 takes it.
    pub fn leaf(weight: f64) -> Self {
        StateTable {
            entries: vec![
                Entry { signature: Signature::LEAF_OUT, weight: 0.0, origin: Origin::Leaf { taken: false } },
                Entry { signature: Signature::LEAF_IN, weight, origin: Origin::Leaf { taken: true } },
            ],
        }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, signature: Signature) -> Option<&Entry> {
        self.entries.iter().find(|e| e.signature == signature)
    }

    /// Position of the cheapest entry projecting to `idx`, first one on ties.
    pub fn best(&self, idx: StateIndex) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, e) in self.entries.iter().enumerate() {
            if e.signature.projection() == idx && best.is_none_or(|b| e.weight < self.entries[b].weight) {
                best = Some(i);
            }
        }
        best
    }

    /// `r_{a,b,c,d}`: cheapest weight among entries projecting to `idx`.
    pub fn weight(&self, idx: StateIndex) -> Option<f64> {
        self.best(idx).map(|i| self.entries[i].weight)
    }

    /// The sixteen-entry view, indexed by [`StateIndex::index`].
    pub fn projected(&self) -> [Option<f64>; 16] {
        let mut out = [None; 16];
        for e in &self.entries {
            let slot = &mut out[e.signature.projection().index()];
            if slot.is_none_or(|w| e.weight < w) {
                *slot = Some(e.weight);
            }
        }
        out
    }

    /// Indices with a feasible entry, ascending.
    pub fn feasible_states(&self) -> Vec<StateIndex> {
        let p = self.projected();
        StateIndex::all().filter(|i| p[i.index()].is_some()).collect()
    }

    pub fn complement(&self) -> StateTable {
        StateTable {
            entries: self.entries.iter().map(|e| Entry { signature: e.signature.complement(), ..*e }).collect(),
        }
    }
}

impl fmt::Debug for StateTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.projected();
        f.debug_map().entries(StateIndex::all().filter_map(|i| p[i.index()].map(|w| (i.to_string(), w)))).finish()
    }
}

/// Value the DP keeps at a cotree node. One-leaf subtrees have no table of
/// their own; unions expand them with [`StateTable::leaf`].
#[derive(Debug, Clone, PartialEq)]
pub enum DpValue {
    SingleVertex(usize),
    Table(StateTable),
}

impl DpValue {
    pub fn table(&self) -> Option<&StateTable> {
        match self {
            DpValue::Table(t) => Some(t),
            DpValue::SingleVertex(_) => None,
        }
    }
}

/// Counters from one DP pass.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpStats {
    pub nodes: usize,
    pub pair_checks: u64,
    pub entries_written: u64,
    pub max_table_len: usize,
}

/// Union of two tables with reusable scratch space.
struct Combiner {
    slot: Vec<u16>,
    touched: Vec<usize>,
    pair_checks: u64,
}

impl Combiner {
    const EMPTY: u16 = u16::MAX;

    fn new() -> Self {
        Combiner { slot: vec![Self::EMPTY; Signature::KEYS], touched: Vec::new(), pair_checks: 0 }
    }

    fn union(&mut self, left: &StateTable, right: &StateTable) -> StateTable {
        let mut out: Vec<Entry> = Vec::new();
        for (i, e1) in left.entries.iter().enumerate() {
            for (j, e2) in right.entries.iter().enumerate() {
                self.pair_checks += 1;
                let Some(signature) = e1.signature.union(e2.signature) else {
                    continue;
                };
                let weight = e1.weight + e2.weight;
                let origin = Origin::Union { left: i as u16, right: j as u16 };
                let key = signature.key();
                match self.slot[key] {
                    Self::EMPTY => {
                        self.slot[key] = out.len() as u16;
                        self.touched.push(key);
                        out.push(Entry { signature, weight, origin });
                    }
                    p => {
                        let e = &mut out[p as usize];
                        if weight < e.weight {
                            e.weight = weight;
                            e.origin = origin;
                        }
                    }
                }
            }
        }
        for key in self.touched.drain(..) {
            self.slot[key] = Self::EMPTY;
        }
        StateTable { entries: out }
    }
}

pub fn dp_complement(v: &DpValue) -> DpValue {
    match v {
        DpValue::SingleVertex(x) => DpValue::SingleVertex(*x),
        DpValue::Table(t) => DpValue::Table(t.complement()),
    }
}

/// Two single vertices: only `{v1, v2}` works.
pub fn dp_union_leaf_leaf(v1: usize, v2: usize, w: &WeightMap) -> StateTable {
    Combiner::new().union(&StateTable::leaf(w.get(v1)), &StateTable::leaf(w.get(v2)))
}

pub fn dp_union_leaf_table(v1: usize, t2: &StateTable, w: &WeightMap) -> StateTable {
    Combiner::new().union(&StateTable::leaf(w.get(v1)), t2)
}

pub fn dp_union_table_table(t1: &StateTable, t2: &StateTable) -> StateTable {
    Combiner::new().union(t1, t2)
}

fn expand<'a>(v: &'a DpValue, w: &WeightMap) -> Cow<'a, StateTable> {
    match v {
        DpValue::SingleVertex(x) => Cow::Owned(StateTable::leaf(w.get(*x))),
        DpValue::Table(t) => Cow::Borrowed(t),
    }
}

/// DP tables for every node of one cotree.
#[derive(Debug)]
pub struct DpRun<'t> {
    tree: &'t Cotree,
    values: Vec<DpValue>,
    pub stats: DpStats,
}

/// Bottom-up pass over `t`; node `i`'s value is at index `i`.
pub fn dp_run<'t>(t: &'t Cotree, w: &WeightMap) -> Result<DpRun<'t>> {
    w.check_len(t.leaf_count())?;
    let mut combiner = Combiner::new();
    let mut values: Vec<DpValue> = Vec::with_capacity(t.node_count());
    let mut stats = DpStats { nodes: t.node_count(), ..DpStats::default() };
    for node in t.nodes() {
        let value = match node.kind {
            NodeKind::Leaf(v) => DpValue::SingleVertex(v),
            NodeKind::Complement(c) => dp_complement(&values[c]),
            NodeKind::Union(a, b) => DpValue::Table(combiner.union(&expand(&values[a], w), &expand(&values[b], w))),
        };
        if let DpValue::Table(table) = &value {
            stats.entries_written += table.len() as u64;
            stats.max_table_len = stats.max_table_len.max(table.len());
        }
        values.push(value);
    }
    stats.pair_checks = combiner.pair_checks;
    Ok(DpRun { tree: t, values, stats })
}

impl<'t> DpRun<'t> {
    pub fn tree(&self) -> &'t Cotree {
        self.tree
    }

    pub fn value(&self, node: NodeId) -> &DpValue {
        &self.values[node]
    }

    pub fn root(&self) -> &DpValue {
        &self.values[self.tree.root()]
    }

    /// The vertex set behind entry `pos` of `node`'s table, sorted. For a
    /// one-leaf node, position 1 is the vertex itself and 0 the empty set.
    pub fn reconstruct(&self, node: NodeId, pos: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(node, pos)];
        while let Some((x, p)) = stack.pop() {
            match self.tree.kind(x) {
                NodeKind::Leaf(v) => {
                    if p == 1 {
                        out.push(v);
                    }
                }
                NodeKind::Complement(c) => stack.push((c, p)),
                NodeKind::Union(a, b) => {
                    let table = self.values[x].table().expect("union nodes carry tables");
                    match table.entries[p].origin {
                        Origin::Union { left, right } => {
                            stack.push((a, left as usize));
                            stack.push((b, right as usize));
                        }
                        Origin::Leaf { .. } => unreachable!("union entry without union origin"),
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Cheapest entry of a root table with its set.
#[derive(Debug, Clone, PartialEq)]
pub struct Extraction {
    pub weight: f64,
    pub set: Vec<usize>,
    pub state: StateIndex,
}

/// Cheapest entry at the root of `run`. Ties go to the smallest `(a,b,c,d)`,
/// then to the lexicographically smallest set.
pub fn extract_connected_min(run: &DpRun<'_>) -> Result<Extraction> {
    let table = run.root().table().ok_or(Error::Internal("a single vertex has no state table"))?;
    let weight = table
        .entries
        .iter()
        .map(|e| e.weight)
        .min_by(|a, b| a.total_cmp(b))
        .ok_or(Error::Internal("root table has no feasible entry"))?;
    let state = table
        .entries
        .iter()
        .filter(|e| e.weight == weight)
        .map(|e| e.signature.projection())
        .min()
        .expect("minimum is attained");
    let set = table
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.weight == weight && e.signature.projection() == state)
        .map(|(pos, _)| run.reconstruct(run.tree.root(), pos))
        .min()
        .expect("minimum is attained");
    Ok(Extraction { weight, set, state })
}

/// How one connected component contributes to a [`Solution`].
#[derive(Debug, Clone, PartialEq)]
pub enum PartKind {
    /// A component with at least two vertices, solved on its own cotree.
    Connected { weight: f64, set: Vec<usize>, state: StateIndex },
    /// An isolated vertex; taken iff the graph has at least two of them.
    Isolated { included: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentPart {
    /// Sorted vertex ids of the component, in the input graph's numbering.
    pub vertices: Vec<usize>,
    pub kind: PartKind,
}

/// A minimum-weight fault-tolerant resolving set.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// Sum of the members' weights, added in ascending vertex order.
    pub weight: f64,
    /// Sorted member ids.
    pub set: Vec<usize>,
    pub components: Vec<ComponentPart>,
}

impl Solution {
    pub fn verify(&self, g: &Graph) -> bool {
        is_fault_tolerant(g, &self.set)
    }
}

/// Minimum-weight fault-tolerant resolving set of the cograph `g`.
///
/// A single vertex needs nothing: there is no pair to resolve.
pub fn solve(g: &Graph, w: &WeightMap) -> Result<Solution> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    w.check_len(g.n())?;
    let components = g.connected_components();
    let isolated = components.iter().filter(|c| c.len() == 1).count();
    let mut parts = Vec::with_capacity(components.len());
    let mut set = Vec::new();
    for comp in components {
        if comp.len() == 1 {
            let included = isolated >= 2;
            if included {
                set.push(comp[0]);
            }
            parts.push(ComponentPart { vertices: comp, kind: PartKind::Isolated { included } });
            continue;
        }
        let (sub, map) = g.induced_subgraph(&comp)?;
        let tree = build_cotree(&sub).map_err(|e| match e {
            Error::NotCograph { witness } => {
                Error::NotCograph { witness: witness.map(|ws| ws.map(|x| map.new_to_old[x])) }
            }
            other => other,
        })?;
        let sub_weights = w.restrict(&map.new_to_old);
        let run = dp_run(&tree, &sub_weights)?;
        let ex = extract_connected_min(&run)?;
        let members: Vec<usize> = ex.set.iter().map(|&x| map.new_to_old[x]).collect();
        set.extend_from_slice(&members);
        parts.push(ComponentPart {
            vertices: comp,
            kind: PartKind::Connected { weight: ex.weight, set: members, state: ex.state },
        });
    }
    set.sort_unstable();
    Ok(Solution { weight: w.total(&set), set, components: parts })
}
