//! Brute-force minimum-weight sets by enumerating all `2^n` vertex subsets.
//!
//! Each pair `u < v` gets a bitmask of the vertices that count for it
//! (distance resolvers, or members of `(N(u) △ N(v)) ∪ {u, v}`); a subset
//! qualifies when it hits every mask often enough. Weights are summed in
//! ascending vertex order.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph::WeightMap;

pub const MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub weight: f64,
    /// Lexicographically smallest optimal set, sorted.
    pub witness: Vec<usize>,
    /// Number of subsets attaining `weight`.
    pub optimal_count: u64,
}

/// Minimum-weight fault-tolerant resolving set.
pub fn oracle_min_ft(g: &Graph, w: &WeightMap) -> Result<OracleResult> {
    enumerate(g, w, &resolver_masks(g)?, 2)
}

/// Minimum-weight 2-neighbourhood-resolving set.
pub fn oracle_min_2nr(g: &Graph, w: &WeightMap) -> Result<OracleResult> {
    enumerate(g, w, &neighbourhood_masks(g)?, 2)
}

/// Minimum-weight resolving set.
pub fn oracle_min_resolving(g: &Graph, w: &WeightMap) -> Result<OracleResult> {
    enumerate(g, w, &resolver_masks(g)?, 1)
}

fn guard(g: &Graph) -> Result<()> {
    if g.n() > MAX_VERTICES {
        Err(Error::OracleTooLarge(g.n()))
    } else {
        Ok(())
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn resolver_masks(g: &Graph) -> Result<Vec<u32>> {
    guard(g)?;
    let dist = g.distance_matrix();
    Ok(pairs(g.n()).map(|(u, v)| (0..g.n()).filter(|&x| dist[x][u] != dist[x][v]).fold(0, |m, x| m | 1 << x)).collect())
}

fn neighbourhood_masks(g: &Graph) -> Result<Vec<u32>> {
    guard(g)?;
    let nbrs: Vec<u32> = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0, |m, &x| m | 1 << x)).collect();
    Ok(pairs(g.n()).map(|(u, v)| (nbrs[u] ^ nbrs[v]) | 1 << u | 1 << v).collect())
}

/// `a` before `b` when both are read as ascending vertex lists.
fn lex_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let p = diff.trailing_zeros();
    let above = |m: u32| p < 31 && m >> (p + 1) != 0;
    if a >> p & 1 == 1 {
        // a continues with p, b with something larger or nothing
        above(b)
    } else {
        !above(a)
    }
}

fn enumerate(g: &Graph, w: &WeightMap, masks: &[u32], need: u32) -> Result<OracleResult> {
    w.check_len(g.n())?;
    let n = g.n();
    let weight_of = |s: u32| (0..n).filter(|v| s >> v & 1 == 1).map(|v| w.get(v)).sum::<f64>();
    let mut best: Option<(f64, u32, u64)> = None;
    for s in 0u32..(1u32 << n) {
        if !masks.iter().all(|&m| (m & s).count_ones() >= need) {
            continue;
        }
        let ws = weight_of(s);
        best = match best {
            None => Some((ws, s, 1)),
            Some((bw, bs, count)) if ws == bw => Some((bw, if lex_less(s, bs) { s } else { bs }, count + 1)),
            Some((bw, ..)) if ws < bw => Some((ws, s, 1)),
            keep => keep,
        };
    }
    let (weight, s, optimal_count) = best.ok_or(Error::Internal("no qualifying subset"))?;
    Ok(OracleResult { weight, witness: (0..n).filter(|v| s >> v & 1 == 1).collect(), optimal_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolving::{is_2nr, is_fault_tolerant, is_resolving};

    fn subset(mask: u32, n: usize) -> Vec<usize> {
        (0..n).filter(|v| mask >> v & 1 == 1).collect()
    }

    #[test]
    fn known_values() {
        let r = oracle_min_ft(&Graph::complete(2), &WeightMap::uniform(2)).unwrap();
        assert_eq!(r, OracleResult { weight: 2.0, witness: vec![0, 1], optimal_count: 1 });

        let r = oracle_min_ft(&Graph::path(3), &WeightMap::uniform(3)).unwrap();
        assert_eq!((r.weight, r.witness), (2.0, vec![0, 2]));

        let r = oracle_min_ft(&Graph::complete(4), &WeightMap::uniform(4)).unwrap();
        assert_eq!(r.weight, 4.0);

        let r = oracle_min_resolving(&Graph::path(3), &WeightMap::uniform(3)).unwrap();
        assert_eq!((r.weight, r.witness, r.optimal_count), (1.0, vec![0], 2));

        let r = oracle_min_resolving(&Graph::complete(3), &WeightMap::uniform(3)).unwrap();
        assert_eq!(r.weight, 2.0);

        let r = oracle_min_2nr(&Graph::empty(1), &WeightMap::uniform(1)).unwrap();
        assert_eq!((r.weight, r.witness), (0.0, vec![]));
    }

    #[test]
    fn two_k2_and_disconnected_gap() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let w = WeightMap::uniform(4);
        assert_eq!(oracle_min_2nr(&two_k2, &w).unwrap().weight, 4.0);
        assert_eq!(oracle_min_ft(&two_k2, &w).unwrap().weight, 4.0);

        // K1 ⊎ P3 (centre 1): the lone vertex may stay out for fault
        // tolerance, but as a 0-vertex it clashes with the 1-vertices 2 and 3
        let g = Graph::from_edges(4, &[(1, 2), (1, 3)]).unwrap();
        let w = WeightMap::uniform(4);
        let ft = oracle_min_ft(&g, &w).unwrap();
        let nr = oracle_min_2nr(&g, &w).unwrap();
        assert_eq!((ft.weight, ft.witness), (2.0, vec![2, 3]));
        assert_eq!((nr.weight, nr.optimal_count), (3.0, 2));
    }

    #[test]
    fn guard_is_hard_error() {
        assert_eq!(oracle_min_ft(&Graph::empty(21), &WeightMap::uniform(21)), Err(Error::OracleTooLarge(21)));
    }

    #[test]
    fn predicates_match_checkers_exhaustively() {
        let graphs = [
            Graph::path(5),
            Graph::cycle(5),
            Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap(),
            Graph::empty(4),
        ];
        for g in &graphs {
            let n = g.n();
            let (res, nr) = (resolver_masks(g).unwrap(), neighbourhood_masks(g).unwrap());
            for s in 0u32..(1 << n) {
                let r = subset(s, n);
                let hits = |ms: &[u32], k| ms.iter().all(|&m| (m & s).count_ones() >= k);
                assert_eq!(hits(&res, 2), is_fault_tolerant(g, &r), "{g:?} {r:?}");
                assert_eq!(hits(&res, 1), is_resolving(g, &r));
                assert_eq!(hits(&nr, 2), is_2nr(g, &r));
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let n = 6;
        for a in 0u32..64 {
            for b in 0u32..64 {
                let (la, lb) = (subset(a, n), subset(b, n));
                assert_eq!(lex_less(a, b), la < lb, "{la:?} {lb:?}");
            }
        }
        // P3 ⊎ K2: the witness beats every other optimal set
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let r = oracle_min_resolving(&g, &WeightMap::uniform(5)).unwrap();
        assert!(is_resolving(&g, &r.witness));
        for s in 0u32..32 {
            let cand = subset(s, 5);
            if is_resolving(&g, &cand) {
                assert!(cand.len() as f64 >= r.weight);
                if cand.len() as f64 == r.weight {
                    assert!(r.witness <= cand);
                }
            }
        }
    }
}
