use rayon::prelude::*;

use crate::clusterers::{kmeans_plus_plus, max_shift, prepare, sq_dist, weighted_mean, Dataset, Fit, FitConfig};
use crate::error::Result;
use crate::model::{Frame, SoftClustering};
use crate::sampling::stream_rng;

/// FCM membership row for one object: `u_j = 1 / sum_l (d_j / d_l)^(2/(m-1))`.
/// An object sitting on centroids splits its membership evenly among them.
pub(crate) fn membership_row(row: &[f64], centroids: &[Vec<f64>], m: f64) -> Vec<f64> {
    let d2: Vec<f64> = centroids.iter().map(|c| sq_dist(row, c)).collect();
    let zeros = d2.iter().filter(|&&d| d == 0.0).count();
    if zeros > 0 {
        return d2
            .iter()
            .map(|&d| if d == 0.0 { 1.0 / zeros as f64 } else { 0.0 })
            .collect();
    }
    let e = 1.0 / (m - 1.0);
    let u: Vec<f64> = d2
        .iter()
        .map(|&dj| 1.0 / d2.iter().map(|&dl| (dj / dl).powf(e)).sum::<f64>())
        .collect();
    let total: f64 = u.iter().sum();
    u.into_iter().map(|v| v / total).collect()
}

pub(crate) fn weighted_centroids(data: &Dataset, degrees: &[Vec<f64>], m: f64, old: &[Vec<f64>]) -> Vec<Vec<f64>> {
    (0..old.len())
        .map(|j| {
            weighted_mean(data.rows().iter().zip(degrees).map(|(r, u)| (r, u[j].powf(m))), data.p())
                .unwrap_or_else(|| old[j].clone())
        })
        .collect()
}

pub(crate) fn objective(data: &Dataset, degrees: &[Vec<f64>], centroids: &[Vec<f64>], m: f64) -> f64 {
    data.rows()
        .iter()
        .zip(degrees)
        .map(|(r, u)| centroids.iter().zip(u).map(|(c, &uj)| uj.powf(m) * sq_dist(r, c)).sum::<f64>())
        .sum()
}

/// Alternating membership and centroid updates, seeded by k-means++.
pub fn fuzzy_cmeans(data: &Dataset, cfg: &FitConfig) -> Result<Fit<SoftClustering>> {
    prepare(data, cfg)?;
    let m = cfg.fuzzifier;
    let mut centroids = kmeans_plus_plus(data.rows(), cfg.k, &mut stream_rng(cfg.seed, 0));
    let mut trace = Vec::new();
    let (mut iterations, mut converged) = (0, false);
    while iterations < cfg.max_iters {
        iterations += 1;
        let degrees: Vec<Vec<f64>> = data.rows().par_iter().map(|r| membership_row(r, &centroids, m)).collect();
        trace.push(objective(data, &degrees, &centroids, m));
        let updated = weighted_centroids(data, &degrees, m, &centroids);
        let shift = max_shift(&centroids, &updated);
        centroids = updated;
        if shift < cfg.tolerance {
            converged = true;
            break;
        }
    }
    let degrees: Vec<Vec<f64>> = data.rows().par_iter().map(|r| membership_row(r, &centroids, m)).collect();
    Ok(Fit {
        clustering: SoftClustering::from_memberships(Frame::with_size(cfg.k)?, &degrees)?,
        centroids,
        objective_trace: trace,
        iterations,
        converged,
        degrees,
    })
}
