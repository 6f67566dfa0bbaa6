use crate::error::{Error, Result};
use crate::model::{FocalSet, MassFunction};
use crate::TOLERANCE;

/// Convert a possibility (membership) vector into the consonant mass
/// function with the same contour.
///
/// Distinct positive levels `1 = p1 > p2 > ... > pr` give mass `p_i - p_{i+1}`
/// to the cut `{w : mu(w) >= p_i}`. A vector whose maximum is below one is
/// rescaled when `renormalize` is set and rejected otherwise.
pub fn possibility_to_consonant(mu: &[f64], renormalize: bool) -> Result<MassFunction> {
    if mu.is_empty() {
        return Err(Error::EmptyFrame);
    }
    if let Some(&bad) = mu.iter().find(|v| !v.is_finite() || **v < 0.0) {
        return Err(Error::InvalidMass {
            object: None,
            mass: bad,
        });
    }
    let max = mu.iter().copied().fold(0.0, f64::max);
    if max <= 0.0 {
        return Err(Error::SubnormalPossibility { max });
    }
    let scale = if (max - 1.0).abs() <= TOLERANCE {
        1.0
    } else if renormalize || max > 1.0 {
        if max > 1.0 + TOLERANCE && !renormalize {
            return Err(Error::OutOfRange {
                name: "possibility",
                value: max,
            });
        }
        max
    } else {
        return Err(Error::SubnormalPossibility { max });
    };
    let pi: Vec<f64> = mu.iter().map(|v| (v / scale).min(1.0)).collect();
    let mut levels: Vec<f64> = pi.iter().copied().filter(|&v| v > 0.0).collect();
    levels.sort_by(|a, b| b.total_cmp(a));
    levels.dedup_by(|a, b| (*a - *b).abs() <= TOLERANCE);
    // The top level always has mass reaching 1.
    levels[0] = 1.0;
    let mut focal = Vec::with_capacity(levels.len());
    for (i, &level) in levels.iter().enumerate() {
        let next = levels.get(i + 1).copied().unwrap_or(0.0);
        let cut = FocalSet::from_indices(
            pi.iter()
                .enumerate()
                .filter(|(_, &v)| v >= level - TOLERANCE)
                .map(|(w, _)| w),
        );
        focal.push((cut, level - next));
    }
    focal.sort_by_key(|(s, _)| *s);
    Ok(MassFunction::from_sorted_unchecked(focal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn level_decomposition() {
        let m = possibility_to_consonant(&[1.0, 0.5], false).unwrap();
        assert_eq!(
            m.focal(),
            &[(FocalSet::singleton(0), 0.5), (FocalSet::full(2), 0.5)]
        );
        assert!(m.is_consonant());
        let crisp = possibility_to_consonant(&[1.0, 0.0], false).unwrap();
        assert_eq!(crisp.focal(), &[(FocalSet::singleton(0), 1.0)]);
    }

    #[test]
    fn subnormal_vectors() {
        assert!(matches!(
            possibility_to_consonant(&[0.8, 0.4], false),
            Err(Error::SubnormalPossibility { .. })
        ));
        let m = possibility_to_consonant(&[0.8, 0.4], true).unwrap();
        assert!((m.mass(FocalSet::singleton(0)) - 0.5).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn contour_recovers_membership(
            raw in prop::collection::vec(0.0f64..1.0, 1..8),
            top in 0usize..8,
        ) {
            let mut mu = raw.clone();
            let top = top % mu.len();
            mu[top] = 1.0;
            let m = possibility_to_consonant(&mu, false).unwrap();
            prop_assert!(m.is_consonant());
            let total: f64 = m.focal().iter().map(|(_, w)| w).sum();
            prop_assert!((total - 1.0).abs() < 1e-9);
            let pl = m.contour(mu.len());
            for (a, b) in pl.iter().zip(&mu) {
                prop_assert!((a - b).abs() < 1e-9, "{pl:?} vs {mu:?}");
            }
        }
    }
}
