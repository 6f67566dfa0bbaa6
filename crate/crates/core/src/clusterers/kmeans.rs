use crate::clusterers::{kmeans_plus_plus, max_shift, prepare, sq_dist, weighted_mean, Dataset, Fit, FitConfig};
use crate::error::Result;
use crate::model::{Frame, HardClustering};
use crate::sampling::stream_rng;

pub(crate) fn nearest(row: &[f64], centroids: &[Vec<f64>]) -> (usize, f64) {
    centroids
        .iter()
        .enumerate()
        .map(|(j, c)| (j, sq_dist(row, c)))
        .fold((0, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best })
}

/// Lloyd's algorithm from k-means++ seeds, best objective over
/// `cfg.restarts` starts.
pub fn kmeans(data: &Dataset, cfg: &FitConfig) -> Result<Fit<HardClustering>> {
    prepare(data, cfg)?;
    let mut best: Option<Fit<HardClustering>> = None;
    for start in 0..cfg.restarts {
        let fit = lloyd(data, cfg, start as u64)?;
        let better = match &best {
            None => true,
            Some(b) => fit.objective_trace.last() < b.objective_trace.last(),
        };
        if better {
            best = Some(fit);
        }
    }
    Ok(best.expect("at least one start"))
}

fn lloyd(data: &Dataset, cfg: &FitConfig, start: u64) -> Result<Fit<HardClustering>> {
    let rows = data.rows();
    let mut centroids = kmeans_plus_plus(rows, cfg.k, &mut stream_rng(cfg.seed, start));
    let mut assignment = vec![0; rows.len()];
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    while iterations < cfg.max_iters {
        iterations += 1;
        let mut sse = 0.0;
        for (slot, row) in assignment.iter_mut().zip(rows) {
            let (j, d) = nearest(row, &centroids);
            *slot = j;
            sse += d;
        }
        trace.push(sse);
        let updated: Vec<Vec<f64>> = (0..cfg.k)
            .map(|j| {
                let members = rows.iter().zip(&assignment).filter(|(_, &a)| a == j).map(|(r, _)| (r, 1.0));
                // An emptied cluster keeps its centroid.
                weighted_mean(members, data.p()).unwrap_or_else(|| centroids[j].clone())
            })
            .collect();
        let shift = max_shift(&centroids, &updated);
        centroids = updated;
        if shift < cfg.tolerance {
            converged = true;
            break;
        }
    }
    let sse = rows.iter().zip(&mut assignment).fold(0.0, |acc, (row, slot)| {
        let (j, d) = nearest(row, &centroids);
        *slot = j;
        acc + d
    });
    if trace.last().is_none_or(|&last| sse < last) {
        trace.push(sse);
    }
    let degrees = assignment
        .iter()
        .map(|&a| (0..cfg.k).map(|j| if j == a { 1.0 } else { 0.0 }).collect())
        .collect();
    Ok(Fit {
        clustering: HardClustering::new(Frame::with_size(cfg.k)?, assignment)?,
        centroids,
        objective_trace: trace,
        iterations,
        converged,
        degrees,
    })
}
