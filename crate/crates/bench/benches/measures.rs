use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use distclust::distributional::{
    distributional_evidential, fuzzy_rand_expectation_fast, rough_interval, rough_interval_with, BoundsMethod,
};
use distclust::metrics::BaseDistance;
use distclust::pipeline::Algorithm;
use distclust::sampling::{
    approx_expectation_fuzzy, approx_expectations_possibilistic, SampleMode, SamplePlan,
};
use distclust_bench::{evidential_pair, fuzzy_pair, iris_output, rough_vs_hard};

const BUDGET: u64 = u64::MAX;

fn closed_form(c: &mut Criterion) {
    let mut g = c.benchmark_group("fuzzy-rand-closed-form");
    for n in [250, 500, 1000] {
        let (a, b) = fuzzy_pair(n, 1);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bch, _| {
            bch.iter(|| fuzzy_rand_expectation_fast(black_box(&a), black_box(&b)).unwrap())
        });
    }
    g.finish();
}

fn rough_bounds(c: &mut Criterion) {
    let mut g = c.benchmark_group("rough-interval");
    for amb in [6, 10] {
        let (r, h) = rough_vs_hard(20, amb, 3);
        g.bench_with_input(BenchmarkId::new("partition", amb), &amb, |bch, _| {
            bch.iter(|| rough_interval(&r, &h, &BaseDistance::Partition, BUDGET).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("rand", amb), &amb, |bch, _| {
            bch.iter(|| rough_interval(&r, &h, &BaseDistance::RAND, BUDGET).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("rand-contingency", amb), &amb, |bch, _| {
            bch.iter(|| rough_interval_with(&r, &h, &BaseDistance::RAND, BUDGET, BoundsMethod::Contingency).unwrap())
        });
    }
    let (r, h) = rough_vs_hard(150, 150, 3);
    g.bench_function("rand-contingency/150-open", |bch| {
        bch.iter(|| rough_interval_with(&r, &h, &BaseDistance::RAND, u64::MAX, BoundsMethod::Contingency).unwrap())
    });
    g.finish();
}

fn exact_evidential(c: &mut Criterion) {
    let (a, b) = evidential_pair(6, 4);
    c.bench_function("evidential-exact/n6", |bch| {
        bch.iter(|| distributional_evidential(&a, &b, &BaseDistance::RAND, BUDGET).unwrap())
    });
}

fn sampled_iris(c: &mut Criterion) {
    let mut g = c.benchmark_group("iris-sampled");
    g.sample_size(10);
    let (data, fcm) = iris_output(Algorithm::Fcm);
    let truth = data.labels().unwrap().to_soft();
    let plan = SamplePlan::new(SampleMode::FuzzyExpectation, 0).with_samples(10_000);
    g.bench_function("fcm-fuzzy-10000", |bch| {
        bch.iter(|| approx_expectation_fuzzy(&fcm, &truth, &BaseDistance::RAND, &plan).unwrap())
    });
    let (_, pcm) = iris_output(Algorithm::Pcm);
    let plan = SamplePlan::new(SampleMode::EvidentialNested, 0).with_samples(1_000);
    g.bench_function("pcm-nested-1000", |bch| {
        bch.iter(|| approx_expectations_possibilistic(&pcm, &truth, &BaseDistance::RAND, &plan).unwrap())
    });
    g.finish();
}

criterion_group!(benches, closed_form, rough_bounds, exact_evidential, sampled_iris);
criterion_main!(benches);
