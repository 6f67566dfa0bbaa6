use rand::Rng;

use super::fcm::membership_row;
use super::pcm::typicality;
use super::rkm::upper_region;
use super::*;
use crate::metrics::rand_index;
use crate::model::{is_fuzzy, is_possibilistic, FocalSet, Frame};
use crate::sampling::stream_rng;

fn blobs(per: usize, seed: u64) -> (Dataset, HardClustering) {
    let mut rng = stream_rng(seed, 0);
    let centers = [[0.0, 0.0], [20.0, 20.0]];
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (c, center) in centers.iter().enumerate() {
        for _ in 0..per {
            rows.push(center.iter().map(|v| v + rng.gen_range(-0.5..0.5)).collect());
            labels.push(c);
        }
    }
    let truth = HardClustering::new(Frame::with_size(2).unwrap(), labels).unwrap();
    (Dataset::new(rows).unwrap(), truth)
}

fn non_increasing(trace: &[f64]) -> bool {
    trace.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12) + 1e-12)
}

#[test]
fn kmeans_trivial_cases() {
    let two = Dataset::new(vec![vec![0.0], vec![10.0]]).unwrap();
    let fit = kmeans(&two, &FitConfig::new(2, 1)).unwrap();
    assert_ne!(fit.clustering.cluster_of(0), fit.clustering.cluster_of(1));

    let same = Dataset::new(vec![vec![1.5, -2.0]; 4]).unwrap();
    let fit = kmeans(&same, &FitConfig::new(1, 1)).unwrap();
    assert_eq!(fit.centroids, vec![vec![1.5, -2.0]]);
    assert!(matches!(kmeans(&same, &FitConfig::new(2, 1)), Err(Error::DegenerateData(_))));
}

#[test]
fn every_fitter_recovers_separated_blobs() {
    let (data, truth) = blobs(30, 4);
    let mut cfg = FitConfig::new(2, 9);
    assert_eq!(rand_index(&kmeans(&data, &cfg).unwrap().clustering, &truth).unwrap(), 1.0);
    assert_eq!(rand_index(&fuzzy_cmeans(&data, &cfg).unwrap().clustering.harden(), &truth).unwrap(), 1.0);
    assert_eq!(
        rand_index(&possibilistic_cmeans(&data, &cfg).unwrap().clustering.harden(), &truth).unwrap(),
        1.0
    );
    let rough = rough_kmeans(&data, &cfg).unwrap().clustering;
    assert!(rough.is_hard());
    assert_eq!(rand_index(&rough.as_hard().unwrap(), &truth).unwrap(), 1.0);
    cfg.alpha = 1.0;
    assert_eq!(
        rand_index(&evidential_cmeans(&data, &cfg).unwrap().clustering.harden(), &truth).unwrap(),
        1.0
    );
}

#[test]
fn objectives_do_not_increase() {
    let (data, _) = blobs(30, 2);
    let mut rng = stream_rng(5, 0);
    let noisy = Dataset::new(
        data.rows()
            .iter()
            .map(|r| r.iter().map(|v| v + rng.gen_range(-8.0..8.0)).collect())
            .collect(),
    )
    .unwrap();
    for seed in 0..5 {
        let cfg = FitConfig::new(3, seed);
        assert!(non_increasing(&kmeans(&noisy, &cfg).unwrap().objective_trace));
        assert!(non_increasing(&fuzzy_cmeans(&noisy, &cfg).unwrap().objective_trace));
    }
}

#[test]
fn fitters_are_deterministic() {
    let (data, _) = blobs(20, 8);
    let cfg = FitConfig::new(3, 17);
    assert_eq!(kmeans(&data, &cfg).unwrap().centroids, kmeans(&data, &cfg).unwrap().centroids);
    assert_eq!(
        evidential_cmeans(&data, &cfg).unwrap().degrees,
        evidential_cmeans(&data, &cfg).unwrap().degrees
    );
}

#[test]
fn fcm_membership_rows() {
    let centroids = vec![vec![-1.0, 0.0], vec![1.0, 0.0]];
    assert_eq!(membership_row(&[0.0, 3.0], &centroids, 2.0), vec![0.5, 0.5]);
    let far = vec![vec![0.0], vec![1.0], vec![5.0]];
    let u = membership_row(&[0.3], &far, 1e6);
    assert!(u.iter().all(|v| (v - 1.0 / 3.0).abs() < 1e-4));
    let (data, _) = blobs(10, 1);
    let fit = fuzzy_cmeans(&data, &FitConfig::new(2, 0)).unwrap();
    assert!(is_fuzzy(&fit.clustering));
    assert!(fit.degrees.iter().all(|u| (u.iter().sum::<f64>() - 1.0).abs() < 1e-12));
}

#[test]
fn pcm_typicalities() {
    assert_eq!(typicality(0.0, 0.7, 5.0), 1.0);
    let (data, _) = blobs(20, 3);
    let mut rows = data.rows().to_vec();
    rows.push(vec![40.0, -20.0]);
    let with_outlier = Dataset::new(rows).unwrap();
    let fit = possibilistic_cmeans(&with_outlier, &FitConfig::new(2, 2)).unwrap();
    assert!(fit.degrees.last().unwrap().iter().all(|&t| t < 0.1));
    assert!(fit.degrees.iter().flatten().all(|&t| t > 0.0 && t <= 1.0));
    assert!(is_possibilistic(&fit.clustering));
}

#[test]
fn rkm_regions() {
    let centroids = vec![vec![0.0], vec![2.0]];
    assert_eq!(upper_region(&[1.0], &centroids, 1.1).0, FocalSet::full(2));
    assert_eq!(upper_region(&[0.9], &centroids, 1.0).0, FocalSet::singleton(0));
    let (data, _) = blobs(15, 6);
    let mut cfg = FitConfig::new(3, 1);
    cfg.epsilon = 1.0;
    assert!(rough_kmeans(&data, &cfg).unwrap().clustering.is_hard());
}

#[test]
fn ecm_empty_mass_vanishes_for_large_delta() {
    let (data, _) = blobs(15, 7);
    let mut cfg = FitConfig::new(2, 3);
    cfg.delta = 1e6;
    let fit = evidential_cmeans(&data, &cfg).unwrap();
    assert!(fit.degrees.iter().all(|m| *m.last().unwrap() < 1e-6));
    assert!(fit.degrees.iter().all(|m| (m.iter().sum::<f64>() - 1.0).abs() < 1e-12));
}

#[test]
fn singleton_ecm_agrees_with_fcm_on_blobs() {
    let (data, _) = blobs(30, 11);
    let mut cfg = FitConfig::new(2, 5);
    cfg.singletons_only = true;
    cfg.empty_set = crate::model::EmptySetPolicy::Renormalize;
    let ecm = evidential_cmeans(&data, &cfg).unwrap().clustering;
    assert!(is_fuzzy(&ecm));
    let fcm = fuzzy_cmeans(&data, &cfg).unwrap().clustering;
    assert_eq!(rand_index(&ecm.harden(), &fcm.harden()).unwrap(), 1.0);
}

#[test]
fn config_validation() {
    let mut cfg = FitConfig::new(2, 0);
    cfg.fuzzifier = 1.0;
    assert!(cfg.validate().is_err());
    let mut cfg = FitConfig::new(2, 0);
    cfg.epsilon = 0.9;
    assert!(cfg.validate().is_err());
    assert!(FitConfig::new(0, 0).validate().is_err());
    assert!(Dataset::new(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
}
