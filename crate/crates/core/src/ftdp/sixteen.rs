//! The weight-only sixteen-state recurrence over `(a, b, c, d)` in which
//! complementation reverses the tuple.
//!
//! Reversal is only right for vertices outside `R`: a member with
//! `|N[v] ∩ R| = |R|` becomes a 1-vertex after complementing, not a 0-vertex.
//! The recurrence therefore overestimates some optima, P3 being the smallest
//! case (it reports 3, the true value is 2). It is kept as a reference point
//! for tests; [`super::dp_run`] does not use it.

use crate::cotree::{Cotree, NodeKind};
use crate::graph::WeightMap;

use super::StateIndex;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SixteenTable(pub [Option<f64>; 16]);

fn add(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    Some(a? + b?)
}

fn min(xs: impl IntoIterator<Item = Option<f64>>) -> Option<f64> {
    xs.into_iter().flatten().min_by(|a, b| a.total_cmp(b))
}

impl SixteenTable {
    pub fn get(&self, i: StateIndex) -> Option<f64> {
        self.0[i.index()]
    }

    pub fn set(&mut self, i: StateIndex, w: Option<f64>) {
        self.0[i.index()] = w;
    }

    /// Minimum over `(a, b, c, d)` for all `c, d`.
    fn min_ab(&self, a: u8, b: u8) -> Option<f64> {
        min([(0, 0), (0, 1), (1, 0), (1, 1)].map(|(c, d)| self.get(StateIndex::new(a, b, c, d))))
    }

    pub fn finite(&self) -> Vec<StateIndex> {
        StateIndex::all().filter(|&i| self.get(i).is_some()).collect()
    }

    pub fn min_weight(&self) -> Option<f64> {
        min(self.0)
    }
}

pub fn complement(t: &SixteenTable) -> SixteenTable {
    let mut out = SixteenTable::default();
    for i in StateIndex::all() {
        out.set(i.reversed(), t.get(i));
    }
    out
}

pub fn union_leaf_leaf(w1: f64, w2: f64) -> SixteenTable {
    let mut out = SixteenTable::default();
    out.set(StateIndex::new(0, 1, 1, 0), Some(w1 + w2));
    out
}

pub fn union_leaf_table(w1: f64, t2: &SixteenTable) -> SixteenTable {
    let s = StateIndex::new;
    let mut out = SixteenTable::default();
    let without_full = min([s(0, 0, 0, 0), s(0, 0, 1, 0), s(0, 1, 0, 0), s(0, 1, 1, 0)].map(|i| t2.get(i)));
    let with_full = min([s(0, 0, 0, 1), s(0, 0, 1, 1), s(0, 1, 0, 1), s(0, 1, 1, 1)].map(|i| t2.get(i)));
    out.set(s(0, 1, 0, 0), add(Some(w1), without_full));
    out.set(s(0, 1, 1, 0), add(Some(w1), with_full));
    for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        out.set(s(1, 0, c, d), t2.get(s(0, 0, c, d)));
    }
    out
}

pub fn union_table_table(t1: &SixteenTable, t2: &SixteenTable) -> SixteenTable {
    let s = StateIndex::new;
    let mut out = SixteenTable::default();
    let (z1, o1, a1) = (t1.min_ab(0, 0), t1.min_ab(0, 1), t1.min_ab(1, 0));
    let (z2, o2, a2) = (t2.min_ab(0, 0), t2.min_ab(0, 1), t2.min_ab(1, 0));
    out.set(s(0, 0, 0, 0), add(z1, z2));
    out.set(s(0, 1, 0, 0), min([add(z1, o2), add(o1, z2), add(o1, o2)]));
    out.set(s(1, 0, 0, 0), min([add(a1, z2), add(z1, a2)]));
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Single(usize),
    Table(SixteenTable),
}

/// Root table of the recurrence, or `None` for a one-leaf tree.
pub fn run(t: &Cotree, w: &WeightMap) -> Option<SixteenTable> {
    let mut values: Vec<Value> = Vec::with_capacity(t.node_count());
    for node in t.nodes() {
        let value = match node.kind {
            NodeKind::Leaf(v) => Value::Single(v),
            NodeKind::Complement(c) => match values[c] {
                Value::Single(v) => Value::Single(v),
                Value::Table(table) => Value::Table(complement(&table)),
            },
            NodeKind::Union(a, b) => Value::Table(match (values[a], values[b]) {
                (Value::Single(x), Value::Single(y)) => union_leaf_leaf(w.get(x), w.get(y)),
                (Value::Single(x), Value::Table(t2)) | (Value::Table(t2), Value::Single(x)) => {
                    union_leaf_table(w.get(x), &t2)
                }
                (Value::Table(t1), Value::Table(t2)) => union_table_table(&t1, &t2),
            }),
        };
        values.push(value);
    }
    match values[t.root()] {
        Value::Table(table) => Some(table),
        Value::Single(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_cotree;
    use crate::graph::Graph;
    use crate::oracle::oracle_min_ft;

    const fn s(a: u8, b: u8, c: u8, d: u8) -> StateIndex {
        StateIndex::new(a, b, c, d)
    }

    fn with(entries: &[(StateIndex, f64)]) -> SixteenTable {
        let mut t = SixteenTable::default();
        for &(i, w) in entries {
            t.set(i, Some(w));
        }
        t
    }

    #[test]
    fn complement_reverses_tuple() {
        let t = with(&[(s(0, 1, 1, 0), 2.0)]);
        assert_eq!(complement(&t), t);
        let t = with(&[(s(1, 0, 0, 0), 3.0)]);
        assert_eq!(complement(&t).finite(), vec![s(0, 0, 0, 1)]);
        let t = with(&[(s(1, 0, 1, 1), 1.0), (s(0, 1, 0, 0), 4.0)]);
        assert_eq!(complement(&complement(&t)), t);
    }

    #[test]
    fn leaf_leaf() {
        let t = union_leaf_leaf(1.0, 1.0);
        assert_eq!(t.finite(), vec![s(0, 1, 1, 0)]);
        assert_eq!(t.get(s(0, 1, 1, 0)), Some(2.0));
        assert_eq!(union_leaf_leaf(3.0, 5.0).get(s(0, 1, 1, 0)), Some(8.0));
    }

    #[test]
    fn leaf_table() {
        let k2 = complement(&union_leaf_leaf(1.0, 1.0));
        let t = union_leaf_table(1.0, &k2);
        assert_eq!(t.finite(), vec![s(0, 1, 0, 0)]);
        assert_eq!(t.get(s(0, 1, 0, 0)), Some(3.0));

        assert_eq!(union_leaf_table(1.0, &SixteenTable::default()), SixteenTable::default());
        assert_eq!(union_leaf_table(0.0, &k2).get(s(0, 1, 0, 0)), Some(2.0));

        let t2 = with(&[(s(0, 0, 1, 1), 5.0), (s(0, 1, 1, 1), 4.0), (s(0, 0, 0, 0), 6.0)]);
        let t = union_leaf_table(1.0, &t2);
        assert_eq!(t.get(s(0, 1, 0, 0)), Some(7.0));
        assert_eq!(t.get(s(0, 1, 1, 0)), Some(5.0));
        assert_eq!(t.get(s(1, 0, 1, 1)), Some(5.0));
        assert_eq!(t.get(s(1, 0, 0, 0)), Some(6.0));
        for c in [0, 1] {
            assert_eq!(t.get(s(0, 1, c, 1)), None);
        }
    }

    #[test]
    fn table_table() {
        let k2 = complement(&union_leaf_leaf(1.0, 1.0));
        let t = union_table_table(&k2, &k2);
        assert_eq!(t.finite(), vec![s(0, 1, 0, 0)]);
        assert_eq!(t.get(s(0, 1, 0, 0)), Some(4.0));

        let t = union_table_table(&with(&[(s(0, 0, 0, 0), 5.0)]), &with(&[(s(0, 0, 1, 1), 7.0)]));
        assert_eq!(t.finite(), vec![s(0, 0, 0, 0)]);
        assert_eq!(t.get(s(0, 0, 0, 0)), Some(12.0));
    }

    #[test]
    fn at_most_three_finite_after_table_union() {
        let full = SixteenTable([Some(1.0); 16]);
        let t = union_table_table(&full, &full);
        assert_eq!(t.finite(), vec![s(0, 0, 0, 0), s(0, 1, 0, 0), s(1, 0, 0, 0)]);
    }

    #[test]
    fn k2_root_keeps_reversal_symmetric_entry() {
        let t = build_cotree(&Graph::complete(2)).unwrap();
        let root = run(&t, &WeightMap::uniform(2)).unwrap();
        assert_eq!(root.finite(), vec![s(0, 1, 1, 0)]);
        assert_eq!(root.min_weight(), Some(2.0));
    }

    #[test]
    fn overestimates_p3() {
        let g = Graph::path(3);
        let w = WeightMap::uniform(3);
        let root = run(&build_cotree(&g).unwrap(), &w).unwrap();
        assert_eq!(root.min_weight(), Some(3.0));
        assert_eq!(oracle_min_ft(&g, &w).unwrap().weight, 2.0);
        assert_eq!(crate::solve(&g, &w).unwrap().weight, 2.0);
    }
}
