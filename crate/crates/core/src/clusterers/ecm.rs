use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::clusterers::{kmeans_plus_plus, max_shift, prepare, sq_dist, Dataset, Fit, FitConfig};
use crate::error::{Error, Result};
use crate::model::{FocalSet, Frame, MassFunction, SoftClustering};
use crate::sampling::stream_rng;

/// Largest frame for which all subsets are used as focal sets.
const MAX_FULL_FRAME: usize = 12;

struct Model<'a> {
    cfg: &'a FitConfig,
    sets: Vec<FocalSet>,
    cards: Vec<f64>,
}

impl Model<'_> {
    /// Subset prototypes: the mean of the member cluster centers.
    fn prototypes(&self, centers: &[Vec<f64>]) -> Vec<Vec<f64>> {
        self.sets
            .iter()
            .zip(&self.cards)
            .map(|(s, &c)| {
                let mut v = vec![0.0; centers[0].len()];
                for j in s.iter() {
                    for (a, x) in v.iter_mut().zip(&centers[j]) {
                        *a += x / c;
                    }
                }
                v
            })
            .collect()
    }

    /// Masses on each focal set, with the empty set last.
    fn masses(&self, row: &[f64], protos: &[Vec<f64>]) -> Vec<f64> {
        let e = 1.0 / (self.cfg.beta - 1.0);
        let d2: Vec<f64> = protos.iter().map(|v| sq_dist(row, v)).collect();
        let prior: Vec<f64> = self.cards.iter().map(|c| c.powf(-self.cfg.alpha * e)).collect();
        let mut out = vec![0.0; self.sets.len() + 1];
        if d2.contains(&0.0) {
            let total: f64 = d2.iter().zip(&prior).filter(|(d, _)| **d == 0.0).map(|(_, p)| p).sum();
            for ((o, d), p) in out.iter_mut().zip(&d2).zip(&prior) {
                if *d == 0.0 {
                    *o = p / total;
                }
            }
            return out;
        }
        let empty = (self.cfg.delta * self.cfg.delta).powf(-e);
        for ((o, d), p) in out.iter_mut().zip(&d2).zip(&prior) {
            *o = p * d.powf(-e);
        }
        *out.last_mut().expect("nonempty") = empty;
        let total: f64 = out.iter().sum();
        out.iter_mut().for_each(|o| *o /= total);
        out
    }

    fn objective(&self, data: &Dataset, masses: &[Vec<f64>], protos: &[Vec<f64>]) -> f64 {
        let (alpha, beta, delta2) = (self.cfg.alpha, self.cfg.beta, self.cfg.delta * self.cfg.delta);
        data.rows()
            .iter()
            .zip(masses)
            .map(|(r, m)| {
                let inner: f64 = protos
                    .iter()
                    .zip(&self.cards)
                    .zip(m)
                    .map(|((v, c), mj)| c.powf(alpha) * mj.powf(beta) * sq_dist(r, v))
                    .sum();
                inner + delta2 * m[self.sets.len()].powf(beta)
            })
            .sum()
    }

    /// Cluster centers minimizing the objective for fixed masses: the
    /// solution of the `k x k` linear system `H V = B`.
    fn centers(&self, data: &Dataset, masses: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        let (k, p) = (self.cfg.k, data.p());
        let (alpha, beta) = (self.cfg.alpha, self.cfg.beta);
        let mut h = DMatrix::<f64>::zeros(k, k);
        let mut b = DMatrix::<f64>::zeros(k, p);
        for (row, m) in data.rows().iter().zip(masses) {
            for ((set, &c), &mj) in self.sets.iter().zip(&self.cards).zip(m) {
                let w = mj.powf(beta);
                if w == 0.0 {
                    continue;
                }
                let (wh, wb) = (c.powf(alpha - 2.0) * w, c.powf(alpha - 1.0) * w);
                for l in set.iter() {
                    for q in set.iter() {
                        h[(l, q)] += wh;
                    }
                    for (t, x) in row.iter().enumerate() {
                        b[(l, t)] += wb * x;
                    }
                }
            }
        }
        let v = h
            .lu()
            .solve(&b)
            .ok_or_else(|| Error::DegenerateData("singular prototype system".into()))?;
        Ok((0..k).map(|l| v.row(l).iter().copied().collect()).collect())
    }
}

/// Evidential c-means: masses over all nonempty subsets of the frame (or
/// the singletons only) plus the empty set, with subset prototypes at the
/// mean of their member centers, cardinality penalty `|A|^alpha`, fuzzifier
/// `beta` and outlier distance `delta`. Empty-set mass is folded in per
/// `cfg.empty_set`; `degrees` keeps the raw masses, empty set last, in the
/// order of increasing subset bitmask.
pub fn evidential_cmeans(data: &Dataset, cfg: &FitConfig) -> Result<Fit<SoftClustering>> {
    prepare(data, cfg)?;
    if !cfg.singletons_only && cfg.k > MAX_FULL_FRAME {
        return Err(Error::InvalidConfig(format!(
            "all-subset ECM supports at most {MAX_FULL_FRAME} clusters"
        )));
    }
    let sets: Vec<FocalSet> = if cfg.singletons_only {
        (0..cfg.k).map(FocalSet::singleton).collect()
    } else {
        (1..1u64 << cfg.k).map(FocalSet::from_bits).collect()
    };
    let model = Model {
        cfg,
        cards: sets.iter().map(|s| s.len() as f64).collect(),
        sets,
    };
    let mut centers = kmeans_plus_plus(data.rows(), cfg.k, &mut stream_rng(cfg.seed, 0));
    let mut trace = Vec::new();
    let (mut iterations, mut converged) = (0, false);
    while iterations < cfg.max_iters {
        iterations += 1;
        let protos = model.prototypes(&centers);
        let masses: Vec<Vec<f64>> = data.rows().par_iter().map(|r| model.masses(r, &protos)).collect();
        trace.push(model.objective(data, &masses, &protos));
        let updated = model.centers(data, &masses)?;
        let shift = max_shift(&centers, &updated);
        centers = updated;
        if shift < cfg.tolerance {
            converged = true;
            break;
        }
    }
    let protos = model.prototypes(&centers);
    let degrees: Vec<Vec<f64>> = data.rows().par_iter().map(|r| model.masses(r, &protos)).collect();
    let masses = degrees
        .iter()
        .enumerate()
        .map(|(x, m)| {
            let entries: Vec<(FocalSet, f64)> = model
                .sets
                .iter()
                .copied()
                .chain([FocalSet::EMPTY])
                .zip(m.iter().copied())
                .collect();
            MassFunction::new(&entries, cfg.k, cfg.empty_set).map_err(|e| e.with_object(x))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Fit {
        clustering: SoftClustering::new(Frame::with_size(cfg.k)?, masses)?,
        centroids: centers,
        objective_trace: trace,
        iterations,
        converged,
        degrees,
    })
}
