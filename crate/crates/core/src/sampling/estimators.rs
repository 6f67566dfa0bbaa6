use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::distributional::{rough_interval_with, RoughClustering};
use crate::error::{Error, Result};
use crate::metrics::{Contingency, HardDistance};
use crate::model::{is_fuzzy, FocalSet, Frame, SoftClustering};
use crate::sampling::draw::{draw_compatible, ConsonantSampler, ProductSampler, RcSampler};
use crate::sampling::{hoeffding_half_width, ApproxResult, SampleMode, SamplePlan};

/// Draws per independent RNG stream. Fixed so results do not depend on the
/// number of worker threads.
pub const SAMPLE_CHUNK: u64 = 256;

/// The RNG for stream `stream` under `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Run `samples` draws split into fixed chunks, one stream per chunk, and
/// return the per-chunk results in chunk order.
fn run_chunks<T, F>(samples: u64, seed: u64, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, u64) -> Result<T> + Sync,
{
    let chunks = samples.div_ceil(SAMPLE_CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let count = SAMPLE_CHUNK.min(samples - c * SAMPLE_CHUNK);
            f(&mut stream_rng(seed, c), count)
        })
        .collect()
}

fn expect_mode(plan: &SamplePlan, allowed: &[SampleMode]) -> Result<()> {
    plan.validate()?;
    if allowed.contains(&plan.mode) {
        Ok(())
    } else {
        Err(Error::InvalidConfig(format!(
            "sample mode {:?} does not apply to this estimator",
            plan.mode
        )))
    }
}

fn require_normalized<D: HardDistance + ?Sized>(d: &D) -> Result<()> {
    if d.is_normalized() {
        Ok(())
    } else {
        Err(Error::BaseNotNormalized(d.name()))
    }
}

fn check_frames(a: &Frame, b: &Frame, na: usize, nb: usize) -> Result<()> {
    if na != nb {
        return Err(Error::MismatchedObjectCount { left: na, right: nb });
    }
    if na == 0 {
        return Err(Error::NoObjects);
    }
    if na < 2 {
        return Err(Error::TooFewObjects { needed: 2, got: na });
    }
    let _ = (a, b);
    Ok(())
}

fn pair_distance<D: HardDistance + ?Sized>(d: &D, a: &[usize], ka: usize, b: &[usize], kb: usize) -> Result<f64> {
    Ok(d.from_table(&Contingency::from_assignments(a, ka, b, kb)?))
}

fn finish(plan: &SamplePlan, started: Instant, lower: f64, upper: f64, warning: Option<String>) -> ApproxResult {
    ApproxResult {
        lower_estimate: lower,
        upper_estimate: upper,
        hoeffding_epsilon: hoeffding_half_width(plan.samples, plan.delta),
        elapsed: started.elapsed(),
        samples_used: plan.samples,
        warning,
    }
}

/// Inner approximation of `[min, max]` of the base distance over pairs
/// compatible with two rough clusterings, from uniform draws.
pub fn approx_interval_rough<D: HardDistance + ?Sized>(
    r1: &RoughClustering,
    r2: &RoughClustering,
    d: &D,
    plan: &SamplePlan,
) -> Result<ApproxResult> {
    expect_mode(plan, &[SampleMode::RoughInterval])?;
    check_frames(r1.frame(), r2.frame(), r1.n(), r2.n())?;
    let started = Instant::now();
    let (k1, k2) = (r1.k(), r2.k());
    let parts = run_chunks(plan.samples, plan.seed, |rng, count| {
        let (mut a, mut b) = (vec![0; r1.n()], vec![0; r2.n()]);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for _ in 0..count {
            draw_compatible(r1.regions(), rng, &mut a);
            draw_compatible(r2.regions(), rng, &mut b);
            let v = pair_distance(d, &a, k1, &b, k2)?;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Ok((lo, hi))
    })?;
    let (lo, hi) = parts
        .into_iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |acc, p| (acc.0.min(p.0), acc.1.max(p.1)));
    Ok(finish(plan, started, lo, hi, None))
}

/// Mean base distance over pairs drawn from the product laws of two fuzzy
/// clusterings.
pub fn approx_expectation_fuzzy<D: HardDistance + ?Sized>(
    f1: &SoftClustering,
    f2: &SoftClustering,
    d: &D,
    plan: &SamplePlan,
) -> Result<ApproxResult> {
    expect_mode(plan, &[SampleMode::FuzzyExpectation])?;
    if !is_fuzzy(f1) || !is_fuzzy(f2) {
        return Err(Error::NotFuzzy);
    }
    require_normalized(d)?;
    check_frames(f1.frame(), f2.frame(), f1.n(), f2.n())?;
    let started = Instant::now();
    let (s1, s2) = (ProductSampler::new(f1), ProductSampler::new(f2));
    let (k1, k2) = (f1.k(), f2.k());
    let parts = run_chunks(plan.samples, plan.seed, |rng, count| {
        let (mut a, mut b) = (vec![0; f1.n()], vec![0; f2.n()]);
        let mut sum = 0.0;
        for _ in 0..count {
            s1.draw_assignment(rng, &mut a);
            s2.draw_assignment(rng, &mut b);
            sum += pair_distance(d, &a, k1, &b, k2)?;
        }
        Ok(sum)
    })?;
    let mean = parts.iter().sum::<f64>() / plan.samples as f64;
    Ok(finish(plan, started, mean, mean, None))
}

/// Lower and upper expectations of the evidential measure, estimated by
/// drawing focal rough clusterings from the product laws.
pub fn approx_expectations_evidential<D: HardDistance + ?Sized>(
    m1: &SoftClustering,
    m2: &SoftClustering,
    d: &D,
    plan: &SamplePlan,
) -> Result<ApproxResult> {
    approx_expectations_with(&ProductSampler::new(m1), m1.frame(), &ProductSampler::new(m2), m2.frame(), d, plan)
}

/// As [`approx_expectations_evidential`], but each input is read as a joint
/// possibility distribution and sampled through its level cuts.
pub fn approx_expectations_possibilistic<D: HardDistance + ?Sized>(
    p1: &SoftClustering,
    p2: &SoftClustering,
    d: &D,
    plan: &SamplePlan,
) -> Result<ApproxResult> {
    approx_expectations_with(
        &ConsonantSampler::new(p1)?,
        p1.frame(),
        &ConsonantSampler::new(p2)?,
        p2.frame(),
        d,
        plan,
    )
}

/// Generic driver over any pair of rough-clustering samplers.
pub fn approx_expectations_with<S1: RcSampler, S2: RcSampler, D: HardDistance + ?Sized>(
    s1: &S1,
    frame1: &Frame,
    s2: &S2,
    frame2: &Frame,
    d: &D,
    plan: &SamplePlan,
) -> Result<ApproxResult> {
    expect_mode(plan, &[SampleMode::EvidentialExactInner, SampleMode::EvidentialNested])?;
    require_normalized(d)?;
    check_frames(frame1, frame2, s1.n(), s2.n())?;
    let started = Instant::now();
    let (k1, k2) = (s1.k(), s2.k());
    let nested = plan.mode == SampleMode::EvidentialNested;
    let parts = run_chunks(plan.samples, plan.seed, |rng, count| {
        let (mut g1, mut g2) = (vec![FocalSet::EMPTY; s1.n()], vec![FocalSet::EMPTY; s2.n()]);
        let (mut a, mut b) = (vec![0; s1.n()], vec![0; s2.n()]);
        let (mut lo_sum, mut hi_sum) = (0.0, 0.0);
        for _ in 0..count {
            s1.draw_regions(rng, &mut g1);
            s2.draw_regions(rng, &mut g2);
            if nested {
                let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
                for _ in 0..plan.inner_samples {
                    draw_compatible(&g1, rng, &mut a);
                    draw_compatible(&g2, rng, &mut b);
                    let v = pair_distance(d, &a, k1, &b, k2)?;
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
                lo_sum += lo;
                hi_sum += hi;
            } else {
                let r1 = RoughClustering::new(frame1.clone(), g1.clone())?;
                let r2 = RoughClustering::new(frame2.clone(), g2.clone())?;
                let iv = rough_interval_with(&r1, &r2, d, plan.budget, plan.bounds)?;
                lo_sum += iv.lower;
                hi_sum += iv.upper;
            }
        }
        Ok((lo_sum, hi_sum))
    })?;
    let s = plan.samples as f64;
    let (lo, hi) = parts.iter().fold((0.0, 0.0), |acc, p| (acc.0 + p.0, acc.1 + p.1));
    let warning = nested.then(|| {
        format!(
            "nested sampling with {} inner draws per pair is biased toward a narrower interval",
            plan.inner_samples
        )
    });
    Ok(finish(plan, started, lo / s, hi / s, warning))
}
