//! Exact Rand-distance bounds between a rough and a hard clustering by
//! dynamic programming over contingency tables.
//!
//! The Rand distance depends on the clusterings only through their
//! contingency table. With the hard side fixed, objects that share a
//! (region, hard class) pair are interchangeable, so it suffices to track
//! which tables are reachable. Hard class `j` contributes a column whose
//! reachable count vectors are enumerated once; a pass over the columns
//! then keeps, for every vector of row sums, the smallest and largest
//! `sum C(n_ij, 2)` seen so far.

use crate::distributional::{IntervalSummary, RoughClustering};
use crate::metrics::RandNormalization;

/// Largest dense state space the DP will allocate.
const MAX_STATES: usize = 1 << 21;

fn pairs(m: usize) -> i64 {
    (m * m.saturating_sub(1) / 2) as i64
}

fn binom(n: u128, r: u128) -> u128 {
    let r = r.min(n.saturating_sub(r));
    (0..r).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The rough side, the hard side's labels, and its cluster count.
pub(crate) struct RoughVsHard<'a> {
    pub rough: &'a RoughClustering,
    pub hard: Vec<usize>,
    pub classes: usize,
}

impl<'a> RoughVsHard<'a> {
    /// Set up when one side is hard and the state space fits.
    pub fn new(r1: &'a RoughClustering, r2: &'a RoughClustering) -> Option<Self> {
        let (rough, hard) = if r2.is_hard() {
            (r1, r2)
        } else if r1.is_hard() {
            (r2, r1)
        } else {
            return None;
        };
        let n = rough.n();
        if n < 2 || n != hard.n() {
            return None;
        }
        let states = (n + 1).checked_pow(rough.k() as u32 - 1)?;
        if states > MAX_STATES {
            return None;
        }
        let labels = hard.as_hard()?.assignment().to_vec();
        Some(RoughVsHard {
            rough,
            classes: hard.k(),
            hard: labels,
        })
    }

    fn columns(&self) -> Vec<Vec<crate::model::FocalSet>> {
        let mut cols = vec![Vec::new(); self.classes];
        for (x, &c) in self.hard.iter().enumerate() {
            cols[c].push(self.rough.region(x));
        }
        cols
    }

    /// Upper bound on DP transitions, from composition counts.
    pub fn cost(&self) -> u128 {
        let k = self.rough.k() as u128;
        let mut before: u128 = 1;
        let mut seen = 0u128;
        let mut total = 0u128;
        for col in self.columns() {
            let mut types: Vec<(crate::model::FocalSet, u128)> = Vec::new();
            for r in &col {
                match types.iter_mut().find(|(s, _)| s == r) {
                    Some((_, m)) => *m += 1,
                    None => types.push((*r, 1)),
                }
            }
            let nj = col.len() as u128;
            let vj = types
                .iter()
                .fold(1u128, |acc, &(s, m)| acc.saturating_mul(binom(m + s.len() as u128 - 1, s.len() as u128 - 1)))
                .min(binom(nj + k - 1, k - 1));
            let states = before.min(binom(seen + k - 1, k - 1));
            total = total.saturating_add(states.saturating_mul(vj)).saturating_add(nj.saturating_mul(vj));
            before = before.saturating_mul(vj);
            seen += nj;
        }
        total.max(1)
    }

    /// Exact minimum and maximum Rand distance over compatible clusterings.
    pub fn bounds(&self, norm: RandNormalization) -> IntervalSummary {
        let k = self.rough.k();
        let n = self.rough.n();
        let radix = n + 1;
        let dims = k - 1;
        let stride: Vec<usize> = (0..dims).map(|i| radix.pow(i as u32)).collect();
        let size = radix.pow(dims as u32);
        let mut lo = vec![i64::MAX; size];
        let mut hi = vec![i64::MIN; size];
        lo[0] = 0;
        hi[0] = 0;
        let mut active = vec![0usize];
        let (mut next_lo, mut next_hi) = (vec![i64::MAX; size], vec![i64::MIN; size]);
        let mut class_pairs = 0i64;
        for col in self.columns() {
            class_pairs += pairs(col.len());
            let vectors = column_vectors(&col, k);
            let moves: Vec<(usize, i64)> = vectors
                .iter()
                .map(|v| {
                    let off = (0..dims).map(|i| v[i] as usize * stride[i]).sum();
                    (off, v.iter().map(|&c| pairs(c as usize)).sum())
                })
                .collect();
            let mut next_active = Vec::new();
            for &s in &active {
                for &(off, g) in &moves {
                    let t = s + off;
                    if next_lo[t] == i64::MAX {
                        next_active.push(t);
                    }
                    next_lo[t] = next_lo[t].min(lo[s] + g);
                    next_hi[t] = next_hi[t].max(hi[s] + g);
                }
            }
            for &s in &active {
                lo[s] = i64::MAX;
                hi[s] = i64::MIN;
            }
            std::mem::swap(&mut lo, &mut next_lo);
            std::mem::swap(&mut hi, &mut next_hi);
            active = next_active;
        }
        let (mut dmin, mut dmax) = (i64::MAX, i64::MIN);
        for &s in &active {
            let mut rest = n;
            let mut row_pairs = 0;
            for i in 0..dims {
                let a = (s / stride[i]) % radix;
                rest -= a;
                row_pairs += pairs(a);
            }
            row_pairs += pairs(rest);
            dmin = dmin.min(row_pairs + class_pairs - 2 * hi[s]);
            dmax = dmax.max(row_pairs + class_pairs - 2 * lo[s]);
        }
        let scale = match norm {
            RandNormalization::UnorderedPairs => 1.0 / pairs(n) as f64,
            RandNormalization::OrderedWithDiagonal => 2.0 / (n * n) as f64,
        };
        IntervalSummary {
            lower: dmin as f64 * scale,
            upper: dmax as f64 * scale,
        }
    }
}

/// Reachable per-cluster counts of one hard class, full length `k`.
fn column_vectors(regions: &[crate::model::FocalSet], k: usize) -> Vec<Vec<u32>> {
    let nj = regions.len();
    let radix = nj + 1;
    let dims = k - 1;
    let stride: Vec<usize> = (0..dims).map(|i| radix.pow(i as u32)).collect();
    let mut seen = vec![false; radix.pow(dims as u32)];
    let mut active = vec![0usize];
    for region in regions {
        let mut next = Vec::with_capacity(active.len() * region.len());
        for &s in &active {
            for i in region.iter() {
                let t = if i < dims { s + stride[i] } else { s };
                if !seen[t] {
                    seen[t] = true;
                    next.push(t);
                }
            }
        }
        for &t in &next {
            seen[t] = false;
        }
        active = next;
    }
    active
        .into_iter()
        .map(|s| {
            let mut v: Vec<u32> = (0..dims).map(|i| ((s / stride[i]) % radix) as u32).collect();
            let used: u32 = v.iter().sum();
            v.push(nj as u32 - used);
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributional::{distributional_rough, interval_summary, rough_interval_with, BoundsMethod};
    use crate::metrics::BaseDistance;
    use crate::pipeline::random::{random_hard, random_rough_any};
    use crate::sampling::stream_rng;

    #[test]
    fn matches_enumeration() {
        let mut rng = stream_rng(21, 0);
        for case in 0..300 {
            let n = 2 + case % 7;
            let k = 1 + case % 4;
            let r = random_rough_any(n, k, &mut rng);
            let h = RoughClustering::from_hard(&random_hard(n, 1 + case % 3, &mut rng));
            for norm in [RandNormalization::UnorderedPairs, RandNormalization::OrderedWithDiagonal] {
                let d = BaseDistance::Rand(norm);
                let dp = RoughVsHard::new(&r, &h).unwrap().bounds(norm);
                let brute = interval_summary(&distributional_rough(&r, &h, &d, u64::MAX).unwrap());
                assert!((dp.lower - brute.lower).abs() < 1e-12, "case {case}");
                assert!((dp.upper - brute.upper).abs() < 1e-12, "case {case}");
                let swapped = rough_interval_with(&h, &r, &d, u64::MAX, BoundsMethod::Contingency).unwrap();
                assert_eq!((swapped.lower, swapped.upper), (dp.lower, dp.upper));
            }
        }
    }

    #[test]
    fn only_with_a_hard_side() {
        let mut rng = stream_rng(2, 0);
        let a = crate::pipeline::random::random_rough(6, 3, 3, &mut rng);
        let b = crate::pipeline::random::random_rough(6, 3, 2, &mut rng);
        assert!(RoughVsHard::new(&a, &b).is_none());
    }

    #[test]
    fn wide_instances_stay_cheap() {
        let mut rng = stream_rng(5, 0);
        let r = crate::pipeline::random::random_rough(150, 3, 150, &mut rng);
        let h = RoughClustering::from_hard(&random_hard(150, 3, &mut rng));
        let dp = RoughVsHard::new(&r, &h).unwrap();
        assert!(dp.cost() < 100_000_000);
        let iv = dp.bounds(RandNormalization::UnorderedPairs);
        assert!(0.0 <= iv.lower && iv.lower <= iv.upper && iv.upper <= 1.0);
    }
}
