use rayon::prelude::*;

use crate::clusterers::fcm::{fuzzy_cmeans, weighted_centroids};
use crate::clusterers::{max_shift, prepare, sq_dist, Dataset, Fit, FitConfig};
use crate::error::Result;
use crate::model::{possibility_to_consonant, Frame, SoftClustering};

/// PCM typicality `1 / (1 + (d^2 / eta)^(1/(m-1)))`.
pub(crate) fn typicality(d2: f64, eta: f64, m: f64) -> f64 {
    1.0 / (1.0 + (d2 / eta).powf(1.0 / (m - 1.0)))
}

/// Fuzzy within-cluster mean squared distance: `sum u^m d^2 / sum u^m`.
fn bandwidths(data: &Dataset, fcm: &Fit<SoftClustering>, m: f64) -> Vec<f64> {
    (0..fcm.centroids.len())
        .map(|j| {
            let (num, den) = data.rows().iter().zip(&fcm.degrees).fold((0.0, 0.0), |acc, (r, u)| {
                let w = u[j].powf(m);
                (acc.0 + w * sq_dist(r, &fcm.centroids[j]), acc.1 + w)
            });
            // Only reachable when every point sits on the centroid.
            if num > 0.0 {
                num / den
            } else {
                f64::MIN_POSITIVE
            }
        })
        .collect()
}

/// Possibilistic c-means started from an FCM run with the same fuzzifier.
///
/// The raw typicalities are kept in `degrees`; the returned clustering
/// rescales each object's typicalities to a maximum of one and stores them
/// as consonant mass functions.
pub fn possibilistic_cmeans(data: &Dataset, cfg: &FitConfig) -> Result<Fit<SoftClustering>> {
    prepare(data, cfg)?;
    let m = cfg.fuzzifier;
    let pre = fuzzy_cmeans(data, cfg)?;
    let eta = cfg.eta.clone().unwrap_or_else(|| bandwidths(data, &pre, m));
    let mut centroids = pre.centroids;
    let typicalities = |centroids: &[Vec<f64>]| -> Vec<Vec<f64>> {
        data.rows()
            .par_iter()
            .map(|r| {
                centroids
                    .iter()
                    .zip(&eta)
                    .map(|(c, &e)| typicality(sq_dist(r, c), e, m))
                    .collect()
            })
            .collect()
    };
    let mut trace = Vec::new();
    let (mut iterations, mut converged) = (0, false);
    while iterations < cfg.max_iters {
        iterations += 1;
        let t = typicalities(&centroids);
        trace.push(pcm_objective(data, &t, &centroids, &eta, m));
        let updated = weighted_centroids(data, &t, m, &centroids);
        let shift = max_shift(&centroids, &updated);
        centroids = updated;
        if shift < cfg.tolerance {
            converged = true;
            break;
        }
    }
    let degrees = typicalities(&centroids);
    let masses = degrees
        .iter()
        .map(|t| possibility_to_consonant(t, true))
        .collect::<Result<Vec<_>>>()?;
    Ok(Fit {
        clustering: SoftClustering::new(Frame::with_size(cfg.k)?, masses)?,
        centroids,
        objective_trace: trace,
        iterations,
        converged,
        degrees,
    })
}

fn pcm_objective(data: &Dataset, t: &[Vec<f64>], centroids: &[Vec<f64>], eta: &[f64], m: f64) -> f64 {
    data.rows()
        .iter()
        .zip(t)
        .map(|(r, tx)| {
            centroids
                .iter()
                .zip(tx)
                .zip(eta)
                .map(|((c, &tj), &e)| tj.powf(m) * sq_dist(r, c) + e * (1.0 - tj).powf(m))
                .sum::<f64>()
        })
        .sum()
}
