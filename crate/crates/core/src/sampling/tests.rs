use super::*;
use crate::distributional::{distributional_fuzzy, RoughClustering};
use crate::metrics::{BaseDistance, RandNormalization};
use crate::model::{EmptySetPolicy, FocalSet, Frame, HardClustering, MassFunction, SoftClustering};
use crate::Error;

const RAND: BaseDistance = BaseDistance::RAND;

fn frame() -> Frame {
    Frame::with_size(2).unwrap()
}

fn truth() -> HardClustering {
    HardClustering::new(frame(), vec![0, 0, 1]).unwrap()
}

fn fixture_e() -> SoftClustering {
    let a = MassFunction::new(
        &[(FocalSet::singleton(0), 0.6), (FocalSet::full(2), 0.4)],
        2,
        EmptySetPolicy::Reject,
    )
    .unwrap();
    SoftClustering::new(
        frame(),
        vec![
            a,
            MassFunction::categorical(FocalSet::singleton(0)),
            MassFunction::categorical(FocalSet::singleton(1)),
        ],
    )
    .unwrap()
}

fn fixture_f1() -> SoftClustering {
    SoftClustering::from_memberships(frame(), &[vec![0.5, 0.5], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap()
}

#[test]
fn two_stage_draw_frequencies() {
    let mut rng = stream_rng(7, 0);
    let rough = SoftClustering::from_regions(frame(), &[FocalSet::full(2)]).unwrap();
    let fuzzy = SoftClustering::from_memberships(frame(), &[vec![0.3, 0.7]]).unwrap();
    let draws = 10_000;
    let mut hits = [0usize; 2];
    for _ in 0..draws {
        hits[0] += (draw_hard(&rough, &mut rng).cluster_of(0) == 0) as usize;
        hits[1] += (draw_hard(&fuzzy, &mut rng).cluster_of(0) == 0) as usize;
    }
    assert!((hits[0] as f64 / draws as f64 - 0.5).abs() < 0.02);
    assert!((hits[1] as f64 / draws as f64 - 0.3).abs() < 0.02);
}

#[test]
fn focal_rc_draw_frequencies() {
    let mut rng = stream_rng(3, 1);
    let e = fixture_e();
    let draws = 10_000;
    let full = (0..draws)
        .filter(|_| draw_rc(&e, &mut rng).region(0) == FocalSet::full(2))
        .count();
    assert!((full as f64 / draws as f64 - 0.4).abs() < 0.02);
}

#[test]
fn fuzzy_estimate_within_hoeffding_bound() {
    let t = truth().to_soft();
    let plan = SamplePlan::new(SampleMode::FuzzyExpectation, 11).with_samples(10_000);
    let est = approx_expectation_fuzzy(&fixture_f1(), &t, &RAND, &plan).unwrap();
    let exact = distributional_fuzzy(&fixture_f1(), &t, &RAND, 1000).unwrap().expectation();
    assert!((est.lower_estimate - exact).abs() <= est.hoeffding_epsilon);
    assert_eq!(est.lower_estimate, est.upper_estimate);
    assert_eq!(est.samples_used, 10_000);
    assert!(est.warning.is_none());
}

#[test]
fn evidential_exact_inner_estimates() {
    let t = truth().to_soft();
    let plan = SamplePlan::new(SampleMode::EvidentialExactInner, 5).with_samples(5_000);
    let est = approx_expectations_evidential(&fixture_e(), &t, &RAND, &plan).unwrap();
    assert_eq!(est.lower_estimate, 0.0);
    assert!((est.upper_estimate - 4.0 / 15.0).abs() <= est.hoeffding_epsilon);

    let nested = SamplePlan::new(SampleMode::EvidentialNested, 5).with_samples(5_000);
    let est = approx_expectations_evidential(&fixture_e(), &t, &RAND, &nested).unwrap();
    assert!(est.warning.is_some());
    assert!(est.upper_estimate <= 4.0 / 15.0 + est.hoeffding_epsilon);
}

#[test]
fn rough_interval_is_inner() {
    let r = RoughClustering::new(frame(), vec![FocalSet::full(2), FocalSet::singleton(0), FocalSet::singleton(1)])
        .unwrap();
    let t = RoughClustering::from_hard(&truth());
    let plan = SamplePlan::new(SampleMode::RoughInterval, 1).with_samples(200);
    let est = approx_interval_rough(&r, &t, &RAND, &plan).unwrap();
    assert_eq!((est.lower_estimate, est.upper_estimate), (0.0, 2.0 / 3.0));
}

#[test]
fn same_seed_same_estimate_across_thread_counts() {
    let t = truth().to_soft();
    let plan = SamplePlan::new(SampleMode::FuzzyExpectation, 99).with_samples(3_000);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| approx_expectation_fuzzy(&fixture_f1(), &t, &RAND, &plan).unwrap())
    };
    let (a, b, c) = (run(1), run(4), run(1));
    assert!(a.same_estimate(&b));
    assert!(a.same_estimate(&c));
    let other = approx_expectation_fuzzy(&fixture_f1(), &t, &RAND, &SamplePlan { seed: 100, ..plan.clone() }).unwrap();
    assert_eq!(other.samples_used, a.samples_used);
}

#[test]
fn estimator_preconditions() {
    let t = truth().to_soft();
    let wrong_mode = SamplePlan::new(SampleMode::RoughInterval, 0);
    assert!(matches!(
        approx_expectation_fuzzy(&fixture_f1(), &t, &RAND, &wrong_mode),
        Err(Error::InvalidConfig(_))
    ));
    let plan = SamplePlan::new(SampleMode::FuzzyExpectation, 0).with_samples(10);
    let squared = BaseDistance::Rand(RandNormalization::OrderedWithDiagonal);
    assert!(matches!(
        approx_expectation_fuzzy(&fixture_f1(), &t, &squared, &plan),
        Err(Error::BaseNotNormalized(_))
    ));
    assert!(matches!(
        approx_expectation_fuzzy(&fixture_e(), &t, &RAND, &plan),
        Err(Error::NotFuzzy)
    ));
    assert!(matches!(
        SamplePlan::new(SampleMode::FuzzyExpectation, 0).with_samples(0).validate(),
        Err(Error::InvalidConfig(_))
    ));
}
