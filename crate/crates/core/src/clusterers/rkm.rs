use crate::clusterers::{kmeans_plus_plus, max_shift, prepare, sq_dist, weighted_mean, Dataset, Fit, FitConfig};
use crate::distributional::RoughClustering;
use crate::error::Result;
use crate::model::{FocalSet, Frame};
use crate::sampling::stream_rng;

/// Clusters whose distance to `row` is within `epsilon` times the smallest.
pub(crate) fn upper_region(row: &[f64], centroids: &[Vec<f64>], epsilon: f64) -> (FocalSet, f64) {
    let d: Vec<f64> = centroids.iter().map(|c| sq_dist(row, c).sqrt()).collect();
    let min = d.iter().copied().fold(f64::INFINITY, f64::min);
    let region = FocalSet::from_indices(d.iter().enumerate().filter(|(_, &dj)| dj <= epsilon * min).map(|(j, _)| j));
    (region, min * min)
}

/// Rough k-means: an object belongs to the lower region of its nearest
/// cluster when no other cluster is within the distance ratio `epsilon`,
/// and to the boundary of every cluster in that ratio otherwise.
/// Centroids blend lower-region and boundary means with the configured
/// weights.
pub fn rough_kmeans(data: &Dataset, cfg: &FitConfig) -> Result<Fit<RoughClustering>> {
    prepare(data, cfg)?;
    let rows = data.rows();
    let mut centroids = kmeans_plus_plus(rows, cfg.k, &mut stream_rng(cfg.seed, 0));
    let mut regions = vec![FocalSet::EMPTY; rows.len()];
    let mut trace = Vec::new();
    let (mut iterations, mut converged) = (0, false);
    while iterations < cfg.max_iters {
        iterations += 1;
        let mut cost = 0.0;
        for (slot, row) in regions.iter_mut().zip(rows) {
            let (region, d2) = upper_region(row, &centroids, cfg.epsilon);
            *slot = region;
            cost += d2;
        }
        trace.push(cost);
        let updated: Vec<Vec<f64>> = (0..cfg.k)
            .map(|j| {
                let lower = weighted_mean(
                    rows.iter().zip(&regions).filter(|(_, r)| r.single() == Some(j)).map(|(x, _)| (x, 1.0)),
                    data.p(),
                );
                let boundary = weighted_mean(
                    rows.iter()
                        .zip(&regions)
                        .filter(|(_, r)| r.len() > 1 && r.contains(j))
                        .map(|(x, _)| (x, 1.0)),
                    data.p(),
                );
                match (lower, boundary) {
                    (Some(l), Some(b)) => {
                        let total = cfg.lower_weight + cfg.upper_weight;
                        l.iter()
                            .zip(&b)
                            .map(|(lv, bv)| (cfg.lower_weight * lv + cfg.upper_weight * bv) / total)
                            .collect()
                    }
                    (Some(l), None) => l,
                    (None, Some(b)) => b,
                    (None, None) => centroids[j].clone(),
                }
            })
            .collect();
        let shift = max_shift(&centroids, &updated);
        centroids = updated;
        if shift < cfg.tolerance {
            converged = true;
            break;
        }
    }
    for (slot, row) in regions.iter_mut().zip(rows) {
        *slot = upper_region(row, &centroids, cfg.epsilon).0;
    }
    let degrees = regions
        .iter()
        .map(|r| (0..cfg.k).map(|j| if r.contains(j) { 1.0 } else { 0.0 }).collect())
        .collect();
    Ok(Fit {
        clustering: RoughClustering::new(Frame::with_size(cfg.k)?, regions)?,
        centroids,
        objective_trace: trace,
        iterations,
        converged,
        degrees,
    })
}
