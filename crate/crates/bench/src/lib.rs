//! Seeded workloads shared by the benchmarks.

use distclust::clusterers::Dataset;
use distclust::distributional::RoughClustering;
use distclust::io::iris;
use distclust::model::SoftClustering;
use distclust::pipeline::random::{random_evidential, random_fuzzy, random_hard, random_rough};
use distclust::pipeline::{fit, Algorithm, IrisOptions};
use distclust::sampling::stream_rng;

pub fn fuzzy_pair(n: usize, seed: u64) -> (SoftClustering, SoftClustering) {
    let mut rng = stream_rng(seed, 0);
    (random_fuzzy(n, 3, 3, &mut rng), random_fuzzy(n, 3, 3, &mut rng))
}

/// A rough clustering with `ambiguous` fully open objects against a hard one.
pub fn rough_vs_hard(n: usize, ambiguous: usize, seed: u64) -> (RoughClustering, RoughClustering) {
    let mut rng = stream_rng(seed, 1);
    let r = random_rough(n, 3, ambiguous, &mut rng);
    let h = RoughClustering::from_hard(&random_hard(n, 3, &mut rng));
    (r, h)
}

pub fn evidential_pair(n: usize, seed: u64) -> (SoftClustering, SoftClustering) {
    let mut rng = stream_rng(seed, 2);
    (random_evidential(n, 3, 2, &mut rng), random_evidential(n, 3, 2, &mut rng))
}

/// Iris features with labels, and one algorithm's output under the
/// experiment's settings.
pub fn iris_output(algorithm: Algorithm) -> (Dataset, SoftClustering) {
    let data = iris();
    let out = fit(algorithm, &data, &IrisOptions::default().fit_config(algorithm)).expect("iris fits");
    (data, out)
}
