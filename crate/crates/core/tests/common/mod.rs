//! Brute-force references written against the raw data only: they read
//! focal sets and masses and recompute everything else from scratch.
#![allow(dead_code)]

use distclust::model::{EmptySetPolicy, FocalSet, Frame, MassFunction, SoftClustering};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const GROUP: f64 = 1e-9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `1 - Rand` over unordered pairs of distinct objects.
pub fn rand_distance(a: &[usize], b: &[usize]) -> f64 {
    let (mut disagree, mut total) = (0usize, 0usize);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            total += 1;
            if (a[i] == a[j]) != (b[i] == b[j]) {
                disagree += 1;
            }
        }
    }
    disagree as f64 / total as f64
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Fewest objects to move so `a` matches `b` up to relabeling, over `n - 1`.
pub fn partition_distance(a: &[usize], b: &[usize]) -> f64 {
    let k = a.iter().chain(b).max().map_or(1, |m| m + 1);
    let best = permutations(k)
        .into_iter()
        .map(|p| a.iter().zip(b).filter(|(x, y)| p[**x] == **y).count())
        .max()
        .unwrap();
    (a.len() - best) as f64 / (a.len() - 1) as f64
}

/// Every choice of one entry per object, with the product of weights.
pub fn product<T: Clone>(per_object: &[Vec<(T, f64)>]) -> Vec<(Vec<T>, f64)> {
    let mut out = vec![(Vec::new(), 1.0)];
    for options in per_object {
        out = out
            .into_iter()
            .flat_map(|(prefix, w)| {
                options.iter().map(move |(x, wx)| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    (p, w * wx)
                })
            })
            .collect();
    }
    out
}

pub fn focal_rcs(m: &SoftClustering) -> Vec<(Vec<FocalSet>, f64)> {
    let per: Vec<Vec<(FocalSet, f64)>> = m.masses().iter().map(|mx| mx.focal().to_vec()).collect();
    product(&per)
}

pub fn compatible(regions: &[FocalSet]) -> Vec<Vec<usize>> {
    let per: Vec<Vec<(usize, f64)>> = regions.iter().map(|r| r.iter().map(|c| (c, 1.0)).collect()).collect();
    product(&per).into_iter().map(|(h, _)| h).collect()
}

/// Sorted values with neighbors closer than `GROUP` merged.
pub fn group(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::new();
    for v in values {
        if out.last().map_or(true, |&l| v - l > GROUP) {
            out.push(v);
        }
    }
    out
}

fn same_set(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= GROUP)
}

/// Mass over value sets: all focal RC pairs, then all compatible pairs.
pub fn evidential(m1: &SoftClustering, m2: &SoftClustering, d: fn(&[usize], &[usize]) -> f64) -> Vec<(Vec<f64>, f64)> {
    let mut out: Vec<(Vec<f64>, f64)> = Vec::new();
    for (r1, w1) in focal_rcs(m1) {
        for (r2, w2) in focal_rcs(m2) {
            let mut values = Vec::new();
            for h1 in compatible(&r1) {
                for h2 in compatible(&r2) {
                    values.push(d(&h1, &h2));
                }
            }
            let set = group(values);
            match out.iter_mut().find(|(s, _)| same_set(s, &set)) {
                Some((_, w)) => *w += w1 * w2,
                None => out.push((set, w1 * w2)),
            }
        }
    }
    out
}

/// Equal as mass functions over value sets, both within `GROUP`.
pub fn same_mass(a: &[(Vec<f64>, f64)], b: &[(Vec<f64>, f64)]) -> bool {
    a.len() == b.len()
        && a.iter().all(|(s, w)| {
            b.iter()
                .find(|(t, _)| same_set(s, t))
                .is_some_and(|(_, v)| (w - v).abs() <= GROUP)
        })
}

/// Expected distance between independent draws from two fuzzy clusterings.
pub fn fuzzy_expectation(f1: &SoftClustering, f2: &SoftClustering, d: fn(&[usize], &[usize]) -> f64) -> f64 {
    let law = |m: &SoftClustering| {
        let per: Vec<Vec<(usize, f64)>> = m
            .masses()
            .iter()
            .map(|mx| mx.focal().iter().map(|(s, w)| (s.single().expect("bayesian"), *w)).collect())
            .collect();
        product(&per)
    };
    let (l1, l2) = (law(f1), law(f2));
    l1.iter()
        .flat_map(|(h1, p1)| l2.iter().map(move |(h2, p2)| p1 * p2 * d(h1, h2)))
        .sum()
}

fn nonempty_subset<R: Rng>(k: usize, rng: &mut R) -> FocalSet {
    FocalSet::from_bits(rng.gen_range(1..1u64 << k))
}

/// Each object gets one or two distinct focal sets.
pub fn random_evidential<R: Rng>(n: usize, k: usize, rng: &mut R) -> SoftClustering {
    let masses = (0..n)
        .map(|_| {
            let a = nonempty_subset(k, rng);
            let b = nonempty_subset(k, rng);
            let entries = if a == b || rng.gen_bool(0.3) {
                vec![(a, 1.0)]
            } else {
                let w = rng.gen_range(0.05..0.95);
                vec![(a, w), (b, 1.0 - w)]
            };
            MassFunction::new(&entries, k, EmptySetPolicy::Reject).unwrap()
        })
        .collect();
    SoftClustering::new(Frame::with_size(k).unwrap(), masses).unwrap()
}

/// Memberships spread over at most `support` clusters per object.
pub fn random_fuzzy<R: Rng>(n: usize, k: usize, support: usize, rng: &mut R) -> SoftClustering {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let mut idx: Vec<usize> = (0..k).collect();
            idx.shuffle(rng);
            let s = rng.gen_range(1..=support.min(k));
            let w: Vec<f64> = (0..s).map(|_| rng.gen_range(0.05..1.0)).collect();
            let total: f64 = w.iter().sum();
            let mut row = vec![0.0; k];
            for (i, wi) in idx.into_iter().zip(w) {
                row[i] = wi / total;
            }
            row
        })
        .collect();
    SoftClustering::from_memberships(Frame::with_size(k).unwrap(), &rows).unwrap()
}

pub fn random_regions<R: Rng>(n: usize, k: usize, rng: &mut R) -> Vec<FocalSet> {
    (0..n).map(|_| nonempty_subset(k, rng)).collect()
}

pub fn random_labels<R: Rng>(n: usize, k: usize, rng: &mut R) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..k)).collect()
}
