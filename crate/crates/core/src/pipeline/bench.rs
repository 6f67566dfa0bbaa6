use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::distributional::{fuzzy_rand_expectation_fast, rough_interval, rough_interval_with, BoundsMethod, DEFAULT_BUDGET};
use crate::error::Result;
use crate::io::iris;
use crate::metrics::BaseDistance;
use crate::pipeline::random::{random_fuzzy, random_rough};
use crate::pipeline::{fit, Algorithm, IrisOptions};
use crate::sampling::{approx_expectation_fuzzy, stream_rng, SampleMode, SamplePlan};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub workload: String,
    pub size: usize,
    pub value: f64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchOptions {
    pub seed: u64,
    pub samples: u64,
    pub fuzzy_sizes: Vec<usize>,
    pub ambiguous_objects: Vec<usize>,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            seed: 0,
            samples: 10_000,
            fuzzy_sizes: vec![250, 500, 1000],
            ambiguous_objects: vec![4, 8, 12],
        }
    }
}

fn timed(workload: &str, size: usize, f: impl FnOnce() -> Result<f64>) -> Result<BenchRecord> {
    let started = Instant::now();
    let value = f()?;
    Ok(BenchRecord {
        workload: workload.to_string(),
        size,
        value,
        seconds: started.elapsed().as_secs_f64(),
    })
}

/// Time the closed-form fuzzy Rand expectation, exact rough intervals of
/// growing ambiguity (contingency program for Rand, enumeration for the
/// partition distance), and sampled fuzzy expectation on Iris.
pub fn run_bench(opts: &BenchOptions) -> Result<Vec<BenchRecord>> {
    let mut rng = stream_rng(opts.seed, 0);
    let mut out = Vec::new();
    for &n in &opts.fuzzy_sizes {
        let (a, b) = (random_fuzzy(n, 3, 3, &mut rng), random_fuzzy(n, 3, 3, &mut rng));
        out.push(timed("fuzzy-rand-closed-form", n, || fuzzy_rand_expectation_fast(&a, &b))?);
    }
    for &amb in &opts.ambiguous_objects {
        let (a, b) = (random_rough(20, 3, amb, &mut rng), random_rough(20, 3, 0, &mut rng));
        out.push(timed("rough-interval-rand", amb, || {
            Ok(rough_interval_with(&a, &b, &BaseDistance::RAND, DEFAULT_BUDGET, BoundsMethod::Contingency)?.upper)
        })?);
        out.push(timed("rough-interval-partition", amb, || {
            Ok(rough_interval(&a, &b, &BaseDistance::Partition, DEFAULT_BUDGET)?.upper)
        })?);
    }
    let data = iris();
    let fcm = fit(Algorithm::Fcm, &data, &IrisOptions::default().fit_config(Algorithm::Fcm))?;
    let truth = data.labels().expect("labels").to_soft();
    let plan = SamplePlan::new(SampleMode::FuzzyExpectation, opts.seed).with_samples(opts.samples);
    out.push(timed("iris-fcm-sampled-rand", opts.samples as usize, || {
        Ok(approx_expectation_fuzzy(&fcm, &truth, &BaseDistance::RAND, &plan)?.lower_estimate)
    })?);
    Ok(out)
}
