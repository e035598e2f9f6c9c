//! Deterministic exhaustive and sampled scans over enumerated elements.
//!
//! Scans run in parallel but always report the first failure in enumeration
//! order, so results do not depend on the number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::QuantifierSpace;

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0;

/// Evaluation budget and sampling seed shared by all scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub budget: u64,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { budget: DEFAULT_BUDGET, seed: DEFAULT_SEED }
    }
}

impl ScanConfig {
    pub fn with_budget(budget: u64) -> Self {
        ScanConfig { budget, ..Self::default() }
    }
}

/// Outcome of a scan: the first failing point (if any) and the coverage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scan<T> {
    pub failure: Option<T>,
    pub space: QuantifierSpace,
}

/// Checks `ok(i)` for every `i < count`.
pub fn scan_elements<F>(count: u64, ok: F) -> Scan<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    let failure = (0..count).into_par_iter().find_first(|&i| !ok(i));
    Scan { failure, space: QuantifierSpace::exhaustive(count) }
}

/// Checks `ok(a, b)` over all ordered pairs when `count²` fits in the budget,
/// otherwise over `budget` pairs drawn from a seeded generator.
pub fn scan_pairs<F>(count: u64, config: &ScanConfig, ok: F) -> Scan<(u64, u64)>
where
    F: Fn(u64, u64) -> bool + Sync,
{
    let total = count.saturating_mul(count);
    if total <= config.budget {
        let failure = (0..total)
            .into_par_iter()
            .map(|k| (k / count, k % count))
            .find_first(|&(a, b)| !ok(a, b));
        return Scan { failure, space: QuantifierSpace::exhaustive(total) };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pairs: Vec<(u64, u64)> = (0..config.budget)
        .map(|_| (rng.gen_range(0..count), rng.gen_range(0..count)))
        .collect();
    let failure = pairs.par_iter().copied().find_first(|&(a, b)| !ok(a, b));
    Scan {
        failure,
        space: QuantifierSpace { total, checked: config.budget, exhaustive: false, seed: Some(config.seed) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_pairs_report_first_failure() {
        let scan = scan_pairs(10, &ScanConfig::default(), |a, b| a + b < 12);
        assert_eq!(scan.failure, Some((3, 9)));
        assert!(scan.space.exhaustive);
        assert_eq!(scan.space.checked, 100);
    }

    #[test]
    fn sampling_is_seeded() {
        let cfg = ScanConfig { budget: 50, seed: 7 };
        let a = scan_pairs(1000, &cfg, |a, b| (a * b) % 97 != 3);
        let b = scan_pairs(1000, &cfg, |a, b| (a * b) % 97 != 3);
        assert_eq!(a, b);
        assert!(!a.space.exhaustive);
        assert_eq!(a.space.seed, Some(7));
        assert_eq!(a.space.checked, 50);
    }

    #[test]
    fn element_scan() {
        let s = scan_elements(100, |i| i != 42 && i != 77);
        assert_eq!(s.failure, Some(42));
    }
}
