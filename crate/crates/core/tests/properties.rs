mod common;

use common::*;
use distclust::distributional::{
    distribution_over_rcs, evidential_expectations_with, fuzzy_rand_expectation_fast, rough_interval_with,
    BoundsMethod, RoughClustering,
};
use distclust::io::{clustering_to_json, parse_clustering};
use distclust::metrics::BaseDistance;
use distclust::model::{EmptySetPolicy, Frame, HardClustering};
use distclust::pipeline::{compare, CompareOptions, Input};
use proptest::prelude::*;

const UNBOUNDED: u64 = u64::MAX;
const METHODS: [BoundsMethod; 2] = [BoundsMethod::Enumerate, BoundsMethod::Contingency];

fn case() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 2usize..=6, 1usize..=3)
}

fn rough(regions: Vec<distclust::model::FocalSet>, k: usize) -> RoughClustering {
    RoughClustering::new(Frame::with_size(k).unwrap(), regions).unwrap()
}

fn hard(labels: Vec<usize>, k: usize) -> RoughClustering {
    RoughClustering::from_hard(&HardClustering::new(Frame::with_size(k).unwrap(), labels).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compatible_count_is_product_of_region_sizes((seed, n, k) in case()) {
        let regions = random_regions(n, k, &mut rng(seed));
        let expected: u128 = regions.iter().map(|r| r.len() as u128).product();
        prop_assert_eq!(rough(regions.clone(), k).compatible_count(), expected);
        prop_assert_eq!(compatible(&regions).len() as u128, expected);
    }

    #[test]
    fn rough_interval_matches_brute_force((seed, n, k) in case()) {
        let mut r = rng(seed);
        let (ra, rb) = (random_regions(n, k, &mut r), random_regions(n, k, &mut r));
        let labels = random_labels(n, k, &mut r);
        let others = [(rough(rb.clone(), k), compatible(&rb)), (hard(labels.clone(), k), vec![labels])];
        for (other, other_hcs) in &others {
            for (base, oracle) in [
                (BaseDistance::RAND, rand_distance as fn(&[usize], &[usize]) -> f64),
                (BaseDistance::Partition, partition_distance),
            ] {
                let values: Vec<f64> = compatible(&ra)
                    .iter()
                    .flat_map(|x| other_hcs.iter().map(move |y| oracle(x, y)))
                    .collect();
                let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                for method in METHODS {
                    let iv = rough_interval_with(&rough(ra.clone(), k), other, &base, UNBOUNDED, method).unwrap();
                    let back = rough_interval_with(other, &rough(ra.clone(), k), &base, UNBOUNDED, method).unwrap();
                    prop_assert!((iv.lower - lo).abs() < 1e-12 && (iv.upper - hi).abs() < 1e-12);
                    prop_assert_eq!((iv.lower, iv.upper), (back.lower, back.upper));
                    prop_assert!(0.0 <= iv.lower && iv.lower <= iv.upper && iv.upper <= 1.0);
                }
            }
        }
    }

    #[test]
    fn fuzzy_closed_form_matches_product_law((seed, n, k) in case()) {
        let mut r = rng(seed);
        let (a, b) = (random_fuzzy(n, k, k, &mut r), random_fuzzy(n, k, k, &mut r));
        let fast = fuzzy_rand_expectation_fast(&a, &b).unwrap();
        prop_assert!((fast - fuzzy_expectation(&a, &b, rand_distance)).abs() < 1e-12);
    }

    #[test]
    fn evidential_expectations_agree_across_bounds_methods((seed, n, k) in case()) {
        let mut r = rng(seed);
        let m = random_evidential(n, k, &mut r);
        let truth = HardClustering::new(Frame::with_size(k).unwrap(), random_labels(n, k, &mut r)).unwrap();
        let d1 = distribution_over_rcs(&m, UNBOUNDED).unwrap();
        let d2 = distribution_over_rcs(&truth.to_soft(), UNBOUNDED).unwrap();
        let [e, c] = METHODS.map(|method| {
            evidential_expectations_with(&d1, &d2, &BaseDistance::RAND, UNBOUNDED, method).unwrap()
        });
        prop_assert!((e.lower_expectation - c.lower_expectation).abs() < 1e-12);
        prop_assert!((e.upper_expectation - c.upper_expectation).abs() < 1e-12);
    }

    #[test]
    fn clustering_files_round_trip((seed, n, k) in case()) {
        let m = random_evidential(n, k, &mut rng(seed));
        let back = parse_clustering(&clustering_to_json(&m), EmptySetPolicy::Reject).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn reported_similarity_swaps_the_distance_endpoints((seed, n, k) in case()) {
        let mut r = rng(seed);
        let a = Input::new(random_evidential(n, k, &mut r));
        let b = Input::new(random_evidential(n, k, &mut r));
        let report = compare(&a, &b, &CompareOptions { budget: UNBOUNDED, ..CompareOptions::default() }).unwrap();
        let [lo, hi] = report.result.distance_range().unwrap();
        prop_assert_eq!(report.result.similarity_range().unwrap(), [1.0 - hi, 1.0 - lo]);
        let swapped = compare(&b, &a, &CompareOptions { budget: UNBOUNDED, ..CompareOptions::default() }).unwrap();
        let [slo, shi] = swapped.result.distance_range().unwrap();
        prop_assert!((slo - lo).abs() < 1e-12 && (shi - hi).abs() < 1e-12);
    }
}
