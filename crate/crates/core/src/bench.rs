//! Scaling measurements for the cotree DP.
//!
//! Only the DP pass and root extraction are timed; cotrees are generated
//! directly so recognition never enters the measurement.

use std::time::{Duration, Instant};

use crate::cotree::random_cotree;
use crate::error::{Error, Result};
use crate::ftdp::{dp_run, extract_connected_min};
use crate::graph::WeightMap;

pub const MIN_EXPONENT: u32 = 10;
pub const MAX_EXPONENT: u32 = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub nodes: usize,
    /// Fastest of the repeats.
    pub elapsed: Duration,
    pub weight: f64,
}

/// Times DP plus extraction on a connected random cotree with `n` leaves,
/// keeping the fastest of `repeats` runs.
pub fn time_once(n: usize, seed: u64, repeats: usize) -> Result<BenchRow> {
    let tree = random_cotree(n, seed)?.into_connected();
    let w = WeightMap::uniform(n);
    let mut best = Duration::MAX;
    let mut weight = 0.0;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let run = dp_run(&tree, &w)?;
        let ex = extract_connected_min(&run)?;
        best = best.min(start.elapsed());
        weight = ex.weight;
    }
    Ok(BenchRow { n, nodes: tree.node_count(), elapsed: best, weight })
}

/// One row per `n = 2^MIN_EXPONENT ..= 2^max_exponent`.
pub fn scaling(max_exponent: u32, seed: u64, repeats: usize) -> Result<Vec<BenchRow>> {
    if max_exponent > MAX_EXPONENT {
        return Err(Error::Internal("bench exponent is limited to 20"));
    }
    (MIN_EXPONENT..=max_exponent).map(|k| time_once(1 << k, seed, repeats)).collect()
}

/// `time(2n) / time(n)` for consecutive rows.
pub fn doubling_ratios(rows: &[BenchRow]) -> Vec<f64> {
    rows.windows(2).map(|w| w[1].elapsed.as_secs_f64() / w[0].elapsed.as_secs_f64().max(1e-9)).collect()
}

pub fn median(xs: &mut [f64]) -> f64 {
    assert!(!xs.is_empty());
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_row_per_exponent() {
        let rows = scaling(12, 0, 1).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1024, 2048, 4096]);
        for r in &rows {
            // 2n - 1 tree nodes plus at most one complement per union
            assert!(r.nodes >= 2 * r.n - 1 && r.nodes <= 2 * r.n - 1 + r.n - 1 + 1);
        }
        assert_eq!(doubling_ratios(&rows).len(), 2);
        assert!(scaling(21, 0, 1).is_err());
    }

    #[test]
    fn median_of_odd_and_even() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
