//! Seeded generators of random clusterings for tests and benchmarks.

use rand::Rng;

use crate::distributional::RoughClustering;
use crate::model::{EmptySetPolicy, FocalSet, Frame, HardClustering, MassFunction, SoftClustering};

pub fn random_hard<R: Rng>(n: usize, k: usize, rng: &mut R) -> HardClustering {
    HardClustering::new(Frame::with_size(k).expect("k >= 1"), (0..n).map(|_| rng.gen_range(0..k)).collect())
        .expect("labels in range")
}

fn random_nonempty<R: Rng>(k: usize, rng: &mut R) -> FocalSet {
    FocalSet::from_bits(rng.gen_range(1..1u64 << k))
}

/// Rough clustering whose first `ambiguous` objects get regions of two or
/// more clusters (when `k > 1`) and whose others are hard.
pub fn random_rough<R: Rng>(n: usize, k: usize, ambiguous: usize, rng: &mut R) -> RoughClustering {
    let regions = (0..n)
        .map(|x| {
            if x < ambiguous && k > 1 {
                loop {
                    let s = random_nonempty(k, rng);
                    if s.len() > 1 {
                        break s;
                    }
                }
            } else {
                FocalSet::singleton(rng.gen_range(0..k))
            }
        })
        .collect();
    RoughClustering::new(Frame::with_size(k).expect("k >= 1"), regions).expect("regions nonempty")
}

/// Rough clustering with uniformly random nonempty regions.
pub fn random_rough_any<R: Rng>(n: usize, k: usize, rng: &mut R) -> RoughClustering {
    let regions = (0..n).map(|_| random_nonempty(k, rng)).collect();
    RoughClustering::new(Frame::with_size(k).expect("k >= 1"), regions).expect("regions nonempty")
}

/// Fuzzy clustering with memberships on at most `support` random clusters.
pub fn random_fuzzy<R: Rng>(n: usize, k: usize, support: usize, rng: &mut R) -> SoftClustering {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let mut row = vec![0.0; k];
            for _ in 0..support.max(1) {
                row[rng.gen_range(0..k)] += rng.gen::<f64>() + 0.05;
            }
            let total: f64 = row.iter().sum();
            row.iter().map(|v| v / total).collect()
        })
        .collect();
    SoftClustering::from_memberships(Frame::with_size(k).expect("k >= 1"), &rows).expect("rows sum to one")
}

/// Evidential clustering with at most `focal` random focal sets per object.
pub fn random_evidential<R: Rng>(n: usize, k: usize, focal: usize, rng: &mut R) -> SoftClustering {
    let masses = (0..n)
        .map(|_| {
            let raw: Vec<(FocalSet, f64)> = (0..focal.max(1))
                .map(|_| (random_nonempty(k, rng), rng.gen::<f64>() + 0.05))
                .collect();
            let total: f64 = raw.iter().map(|e| e.1).sum();
            let entries: Vec<_> = raw.into_iter().map(|(s, m)| (s, m / total)).collect();
            MassFunction::new(&entries, k, EmptySetPolicy::Reject).expect("valid masses")
        })
        .collect();
    SoftClustering::new(Frame::with_size(k).expect("k >= 1"), masses).expect("same frame")
}
