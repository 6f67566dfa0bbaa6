//! The c-means family: k-means, fuzzy, possibilistic, rough and evidential
//! c-means, at desk scale.

mod ecm;
mod fcm;
mod kmeans;
mod pcm;
mod rkm;

pub use ecm::evidential_cmeans;
pub use fcm::fuzzy_cmeans;
pub use kmeans::kmeans;
pub use pcm::possibilistic_cmeans;
pub use rkm::rough_kmeans;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{EmptySetPolicy, HardClustering, MAX_CLUSTERS};

/// Real-valued feature rows with optional ground truth.
#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    rows: Vec<Vec<f64>>,
    feature_names: Vec<String>,
    labels: Option<HardClustering>,
}

impl Dataset {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let p = rows.first().map(Vec::len).ok_or(Error::NoObjects)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != p {
                return Err(Error::DegenerateData(format!(
                    "row {i} has {} features, expected {p}",
                    row.len()
                )));
            }
            if let Some(v) = row.iter().find(|v| !v.is_finite()) {
                return Err(Error::DegenerateData(format!("row {i} holds non-finite value {v}")));
            }
        }
        Ok(Dataset {
            feature_names: (1..=p).map(|j| format!("x{j}")).collect(),
            rows,
            labels: None,
        })
    }

    pub fn with_feature_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.p() {
            return Err(Error::Schema(format!("{} feature names for {} columns", names.len(), self.p())));
        }
        self.feature_names = names;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: HardClustering) -> Result<Self> {
        if labels.n() != self.n() {
            return Err(Error::MismatchedObjectCount {
                left: self.n(),
                right: labels.n(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn p(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn labels(&self) -> Option<&HardClustering> {
        self.labels.as_ref()
    }

    fn distinct_points(&self, at_least: usize) -> bool {
        let mut seen: Vec<&Vec<f64>> = Vec::new();
        for row in &self.rows {
            if !seen.contains(&row) {
                seen.push(row);
                if seen.len() >= at_least {
                    return true;
                }
            }
        }
        false
    }
}

/// Settings shared by all fitters; each reads the fields it needs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitConfig {
    pub k: usize,
    pub seed: u64,
    pub max_iters: usize,
    pub tolerance: f64,
    /// Independent k-means starts; the lowest objective wins.
    pub restarts: usize,
    /// Fuzzifier `m` of FCM and PCM.
    pub fuzzifier: f64,
    /// RKM distance-ratio threshold.
    pub epsilon: f64,
    pub lower_weight: f64,
    pub upper_weight: f64,
    /// PCM bandwidths; estimated from an FCM pre-run when absent.
    pub eta: Option<Vec<f64>>,
    /// ECM cardinality penalty exponent.
    pub alpha: f64,
    /// ECM fuzzifier.
    pub beta: f64,
    /// ECM outlier distance.
    pub delta: f64,
    /// Restrict ECM focal sets to singletons (plus the empty set).
    pub singletons_only: bool,
    pub empty_set: EmptySetPolicy,
}

impl FitConfig {
    pub fn new(k: usize, seed: u64) -> Self {
        FitConfig {
            k,
            seed,
            max_iters: 300,
            tolerance: 1e-6,
            restarts: 1,
            fuzzifier: 2.0,
            epsilon: 1.1,
            lower_weight: 0.7,
            upper_weight: 0.3,
            eta: None,
            alpha: 1.0,
            beta: 2.0,
            delta: 10.0,
            singletons_only: false,
            empty_set: EmptySetPolicy::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.k < 1 || self.k > MAX_CLUSTERS {
            return bad(format!("k must lie in 1..={MAX_CLUSTERS}, got {}", self.k));
        }
        if self.max_iters < 1 || self.restarts < 1 {
            return bad("max_iters and restarts must be at least 1".into());
        }
        if !(self.tolerance >= 0.0) {
            return bad(format!("tolerance must be nonnegative, got {}", self.tolerance));
        }
        if !(self.fuzzifier > 1.0) {
            return bad(format!("fuzzifier m must exceed 1, got {}", self.fuzzifier));
        }
        if !(self.epsilon >= 1.0) {
            return bad(format!("epsilon must be at least 1, got {}", self.epsilon));
        }
        if !(self.lower_weight >= 0.0 && self.upper_weight >= 0.0 && self.lower_weight + self.upper_weight > 0.0) {
            return bad("region weights must be nonnegative and not both zero".into());
        }
        if !(self.alpha > 0.0 && self.delta > 0.0) {
            return bad("alpha and delta must be positive".into());
        }
        if !(self.beta > 1.0) {
            return bad(format!("beta must exceed 1, got {}", self.beta));
        }
        if let Some(eta) = &self.eta {
            if eta.len() != self.k || eta.iter().any(|&e| !(e > 0.0)) {
                return bad("eta needs one positive value per cluster".into());
            }
        }
        Ok(())
    }
}

/// A fitted clustering with the diagnostics of the run that produced it.
#[derive(Clone, Debug)]
pub struct Fit<T> {
    pub clustering: T,
    pub centroids: Vec<Vec<f64>>,
    /// Objective after each iteration.
    pub objective_trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// Per-object degrees behind the clustering: memberships, typicalities
    /// or masses, depending on the algorithm.
    pub degrees: Vec<Vec<f64>>,
}

fn prepare(data: &Dataset, cfg: &FitConfig) -> Result<()> {
    cfg.validate()?;
    if data.n() < cfg.k || !data.distinct_points(cfg.k) {
        return Err(Error::DegenerateData(format!("fewer than {} distinct points", cfg.k)));
    }
    Ok(())
}

pub(crate) fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn max_shift(old: &[Vec<f64>], new: &[Vec<f64>]) -> f64 {
    old.iter()
        .zip(new)
        .map(|(a, b)| sq_dist(a, b).sqrt())
        .fold(0.0, f64::max)
}

/// k-means++ seeding: the first centroid uniform, each next one drawn with
/// probability proportional to the squared distance to the nearest chosen.
fn kmeans_plus_plus<R: Rng>(rows: &[Vec<f64>], k: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let mut centroids = vec![rows[rng.gen_range(0..rows.len())].clone()];
    let mut nearest: Vec<f64> = rows.iter().map(|r| sq_dist(r, &centroids[0])).collect();
    while centroids.len() < k {
        let total: f64 = nearest.iter().sum();
        let pick = if total > 0.0 {
            let mut u = rng.gen::<f64>() * total;
            let mut idx = rows.len() - 1;
            for (i, &w) in nearest.iter().enumerate() {
                if u < w {
                    idx = i;
                    break;
                }
                u -= w;
            }
            idx
        } else {
            rng.gen_range(0..rows.len())
        };
        let c = rows[pick].clone();
        for (d, r) in nearest.iter_mut().zip(rows) {
            *d = d.min(sq_dist(r, &c));
        }
        centroids.push(c);
    }
    centroids
}

/// Weighted mean of rows; `None` when the weights vanish.
fn weighted_mean<'a, I>(rows: I, p: usize) -> Option<Vec<f64>>
where
    I: IntoIterator<Item = (&'a Vec<f64>, f64)>,
{
    let mut acc = vec![0.0; p];
    let mut total = 0.0;
    for (row, w) in rows {
        total += w;
        for (a, v) in acc.iter_mut().zip(row) {
            *a += w * v;
        }
    }
    (total > 0.0).then(|| acc.into_iter().map(|a| a / total).collect())
}

#[cfg(test)]
mod tests;
