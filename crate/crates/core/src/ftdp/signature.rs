//! What the DP remembers about a partial solution `R` on a subgraph `H`.
//!
//! For a vertex `v` write `k(v) = |N[v] ∩ R|`. Complementing `H` maps
//! `k(v)` to `|R| - k(v) + [v ∈ R]`, so the counts that matter for later
//! unions (0 and 1) are only recoverable after a complement if we also know
//! whether the vertex is in `R`. A [`Signature`] therefore records eight
//! existence flags split by membership, plus `|R|` saturated at two. The flag
//! set is closed under both operations: complement reverses the bit order,
//! union needs only the flags and the sizes of both sides.

use std::fmt;

use crate::graph::Graph;

/// `|R|` saturated at two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SizeClass {
    Empty = 0,
    One = 1,
    Many = 2,
}

impl SizeClass {
    pub fn of(size: usize) -> Self {
        match size {
            0 => SizeClass::Empty,
            1 => SizeClass::One,
            _ => SizeClass::Many,
        }
    }

    fn plus(self, other: SizeClass) -> SizeClass {
        SizeClass::of(self as usize + other as usize)
    }
}

/// Flag bits. Bit `i` and bit `7 - i` swap under complementation.
pub mod flag {
    /// `v ∉ R`, `k(v) = 0`.
    pub const ZERO_OUT: u8 = 1 << 0;
    /// `v ∈ R`, `k(v) = 1`.
    pub const ONE_IN: u8 = 1 << 1;
    /// `v ∉ R`, `k(v) = 1`.
    pub const ONE_OUT: u8 = 1 << 2;
    /// `v ∈ R`, `k(v) = 2`.
    pub const TWO_IN: u8 = 1 << 3;
    /// `v ∈ R`, `k(v) = |R| - 1`.
    pub const NEAR_IN: u8 = 1 << 4;
    /// `v ∉ R`, `k(v) = |R| - 1`.
    pub const NEAR_OUT: u8 = 1 << 5;
    /// `v ∈ R`, `k(v) = |R|`.
    pub const FULL_IN: u8 = 1 << 6;
    /// `v ∉ R`, `k(v) = |R|`.
    pub const FULL_OUT: u8 = 1 << 7;

    pub(crate) const LOW: u8 = ZERO_OUT | ONE_IN | ONE_OUT;
    pub(crate) const ABSOLUTE: u8 = ZERO_OUT | ONE_IN | ONE_OUT | TWO_IN;
    pub(crate) const RELATIVE: u8 = NEAR_IN | NEAR_OUT | FULL_IN | FULL_OUT;
    pub(crate) const FULL: u8 = FULL_IN | FULL_OUT;
}

/// Refined state of a partial solution; see the module docs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(u16);

impl Signature {
    /// Number of distinct keys, an upper bound on the entries of one table.
    pub const KEYS: usize = 3 << 8;

    /// A lone vertex left out of `R`.
    pub const LEAF_OUT: Signature = Signature::new(SizeClass::Empty, flag::ZERO_OUT | flag::FULL_OUT);
    /// A lone vertex put into `R`.
    pub const LEAF_IN: Signature = Signature::new(SizeClass::One, flag::ONE_IN | flag::FULL_IN);

    pub const fn new(size: SizeClass, flags: u8) -> Self {
        Signature(((size as u16) << 8) | flags as u16)
    }

    pub fn size_class(self) -> SizeClass {
        match self.0 >> 8 {
            0 => SizeClass::Empty,
            1 => SizeClass::One,
            _ => SizeClass::Many,
        }
    }

    pub fn flags(self) -> u8 {
        self.0 as u8
    }

    pub fn has(self, f: u8) -> bool {
        self.flags() & f != 0
    }

    #[inline]
    pub(crate) fn key(self) -> usize {
        self.0 as usize
    }

    /// Signature of the same set in the complemented subgraph.
    #[inline]
    pub fn complement(self) -> Signature {
        Signature::new(self.size_class(), self.flags().reverse_bits())
    }

    /// Signature of `R1 ∪ R2` on the disjoint union, or `None` when some
    /// cross pair `u ∈ H1, v ∈ H2` would have `h(u, v) = k(u) + k(v) < 2`.
    #[inline]
    pub fn union(self, other: Signature) -> Option<Signature> {
        let (f1, f2) = (self.flags(), other.flags());
        if (f1 & flag::ZERO_OUT != 0 && f2 & flag::LOW != 0) || (f2 & flag::ZERO_OUT != 0 && f1 & flag::LOW != 0) {
            return None;
        }
        // Counts are unchanged; only `|R| - 1` and `|R|` move with the other
        // side's contribution to `|R|`.
        fn lift(f: u8, other: SizeClass) -> u8 {
            match other {
                SizeClass::Empty => f & flag::RELATIVE,
                SizeClass::One => (f & flag::FULL) >> 2,
                SizeClass::Many => 0,
            }
        }
        let flags = ((f1 | f2) & flag::ABSOLUTE) | lift(f1, other.size_class()) | lift(f2, self.size_class());
        Some(Signature::new(self.size_class().plus(other.size_class()), flags))
    }

    /// Position in the 16-entry `(a, b, c, d)` view.
    pub fn projection(self) -> StateIndex {
        StateIndex {
            a: self.has(flag::ZERO_OUT),
            b: self.has(flag::ONE_IN | flag::ONE_OUT),
            c: self.has(flag::NEAR_IN | flag::NEAR_OUT),
            d: self.has(flag::FULL_IN | flag::FULL_OUT),
        }
    }

    /// Signature of `R` (given as a membership mask) measured directly on `g`.
    pub fn observe(g: &Graph, inside: &[bool]) -> Signature {
        let size = inside.iter().filter(|&&x| x).count();
        let mut flags = 0u8;
        for v in 0..g.n() {
            let member = inside[v];
            let k = usize::from(member) + g.neighbors(v).iter().filter(|&&w| inside[w]).count();
            let mut mark = |f_in: u8, f_out: u8| flags |= if member { f_in } else { f_out };
            match k {
                0 => mark(0, flag::ZERO_OUT),
                1 => mark(flag::ONE_IN, flag::ONE_OUT),
                2 => mark(flag::TWO_IN, 0),
                _ => {}
            }
            if size >= 1 && k == size - 1 {
                mark(flag::NEAR_IN, flag::NEAR_OUT);
            }
            if k == size {
                mark(flag::FULL_IN, flag::FULL_OUT);
            }
        }
        Signature::new(SizeClass::of(size), flags)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["0out", "1in", "1out", "2in", "n-1in", "n-1out", "nin", "nout"];
        let names: Vec<_> = (0..8).filter(|i| self.flags() >> i & 1 == 1).map(|i| NAMES[i]).collect();
        write!(f, "Signature({:?}; {})", self.size_class(), names.join(","))
    }
}

/// `(a, b, c, d)`: whether a 0-, 1-, `(|R|-1)`- and `|R|`-vertex exists.
/// Orders lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateIndex {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl StateIndex {
    pub const fn new(a: u8, b: u8, c: u8, d: u8) -> Self {
        StateIndex { a: a != 0, b: b != 0, c: c != 0, d: d != 0 }
    }

    /// `8a + 4b + 2c + d`.
    pub fn index(self) -> usize {
        (usize::from(self.a) << 3) | (usize::from(self.b) << 2) | (usize::from(self.c) << 1) | usize::from(self.d)
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 16);
        StateIndex { a: i & 8 != 0, b: i & 4 != 0, c: i & 2 != 0, d: i & 1 != 0 }
    }

    /// All sixteen indices in lexicographic order.
    pub fn all() -> impl Iterator<Item = StateIndex> {
        (0..16).map(StateIndex::from_index)
    }

    /// `(d, c, b, a)`.
    pub fn reversed(self) -> Self {
        StateIndex { a: self.d, b: self.c, c: self.b, d: self.a }
    }
}

impl fmt::Display for StateIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |x: bool| u8::from(x);
        write!(f, "({},{},{},{})", bit(self.a), bit(self.b), bit(self.c), bit(self.d))
    }
}


#[cfg(test)]
mod closure {
    use super::*;
    use std::collections::BTreeSet;

    /// Signatures reachable from single vertices by union and complement.
    pub(crate) fn reachable() -> BTreeSet<Signature> {
        let mut seen: BTreeSet<Signature> = [Signature::LEAF_OUT, Signature::LEAF_IN].into();
        loop {
            let current: Vec<_> = seen.iter().copied().collect();
            let mut grown = false;
            for &a in &current {
                grown |= seen.insert(a.complement());
                for &b in &current {
                    if let Some(u) = a.union(b) {
                        grown |= seen.insert(u);
                    }
                }
            }
            if !grown {
                return seen;
            }
        }
    }

    #[test]
    fn reachable_signatures_are_few() {
        let all = reachable();
        println!("{} reachable signatures", all.len());
        assert!(all.len() < Signature::KEYS);
        for s in &all {
            let p = s.projection();
            assert!(!(p.a && p.b), "{s:?}");
        }
    }
}
