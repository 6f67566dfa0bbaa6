use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{FocalSet, Frame, HardClustering};
use crate::INPUT_TOLERANCE;

/// What to do with mass assigned to the empty set (as produced by ECM).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmptySetPolicy {
    Reject,
    /// Move the empty-set mass onto the whole frame.
    #[default]
    RedistributeOmega,
    /// Drop the empty-set mass and rescale the rest.
    Renormalize,
}

impl FromStr for EmptySetPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reject" => Ok(EmptySetPolicy::Reject),
            "redistribute-omega" => Ok(EmptySetPolicy::RedistributeOmega),
            "renormalize" => Ok(EmptySetPolicy::Renormalize),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// A normal mass function over the subsets of a frame.
///
/// Focal sets are kept sorted by bitmask and carry strictly positive mass
/// summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct MassFunction {
    focal: Vec<(FocalSet, f64)>,
}

impl MassFunction {
    /// Validate raw `(set, mass)` entries over a frame of `k` clusters.
    ///
    /// Zero masses are dropped, repeated sets merged, empty-set mass handled
    /// per `policy`. A total within `INPUT_TOLERANCE` of one is rescaled to
    /// exactly one; anything further off is rejected.
    pub fn new(entries: &[(FocalSet, f64)], k: usize, policy: EmptySetPolicy) -> Result<Self> {
        let frame_set = FocalSet::full(k);
        let mut empty_mass = 0.0;
        let mut focal: Vec<(FocalSet, f64)> = Vec::with_capacity(entries.len());
        for &(set, mass) in entries {
            if !mass.is_finite() || mass < 0.0 {
                return Err(Error::InvalidMass { object: None, mass });
            }
            if !set.is_subset_of(frame_set) {
                return Err(Error::FocalOutsideFrame { set: set.bits(), k });
            }
            if mass == 0.0 {
                continue;
            }
            if set.is_empty() {
                empty_mass += mass;
                continue;
            }
            match focal.iter_mut().find(|(s, _)| *s == set) {
                Some((_, m)) => *m += mass,
                None => focal.push((set, mass)),
            }
        }
        if empty_mass > 0.0 {
            match policy {
                EmptySetPolicy::Reject => {
                    return Err(Error::EmptyFocalSet {
                        object: None,
                        mass: empty_mass,
                    })
                }
                EmptySetPolicy::RedistributeOmega => {
                    match focal.iter_mut().find(|(s, _)| *s == frame_set) {
                        Some((_, m)) => *m += empty_mass,
                        None => focal.push((frame_set, empty_mass)),
                    }
                }
                EmptySetPolicy::Renormalize => {
                    let rest: f64 = focal.iter().map(|(_, m)| m).sum();
                    if rest <= 0.0 {
                        return Err(Error::EmptyFocalSet {
                            object: None,
                            mass: empty_mass,
                        });
                    }
                    for (_, m) in &mut focal {
                        *m /= rest;
                    }
                }
            }
        }
        let sum: f64 = focal.iter().map(|(_, m)| m).sum();
        if (sum - 1.0).abs() > INPUT_TOLERANCE {
            return Err(Error::MassSumViolation { object: None, sum });
        }
        // Sums already one up to rounding are kept as given, so stored
        // masses survive a write/read cycle bit for bit.
        if (sum - 1.0).abs() > 1e-12 {
            for (_, m) in &mut focal {
                *m /= sum;
            }
        }
        focal.sort_by_key(|(s, _)| *s);
        Ok(MassFunction { focal })
    }

    /// All mass on one set.
    pub fn categorical(set: FocalSet) -> Self {
        assert!(!set.is_empty());
        MassFunction {
            focal: vec![(set, 1.0)],
        }
    }

    /// Bayesian mass function from a membership vector summing to one.
    pub fn from_membership(membership: &[f64]) -> Result<Self> {
        let entries: Vec<_> = membership
            .iter()
            .enumerate()
            .map(|(i, &m)| (FocalSet::singleton(i), m))
            .collect();
        MassFunction::new(&entries, membership.len(), EmptySetPolicy::Reject)
    }

    pub(crate) fn from_sorted_unchecked(focal: Vec<(FocalSet, f64)>) -> Self {
        MassFunction { focal }
    }

    pub fn focal(&self) -> &[(FocalSet, f64)] {
        &self.focal
    }

    pub fn mass(&self, set: FocalSet) -> f64 {
        self.focal
            .iter()
            .find(|(s, _)| *s == set)
            .map_or(0.0, |(_, m)| *m)
    }

    /// One focal set.
    pub fn is_logical(&self) -> bool {
        self.focal.len() == 1
    }

    /// Only singleton focal sets.
    pub fn is_bayesian(&self) -> bool {
        self.focal.iter().all(|(s, _)| s.is_singleton())
    }

    /// Focal sets form a chain under inclusion.
    pub fn is_consonant(&self) -> bool {
        let mut sets: Vec<FocalSet> = self.focal.iter().map(|(s, _)| *s).collect();
        sets.sort_by_key(|s| s.len());
        sets.windows(2).all(|w| w[0].is_subset_of(w[1]))
    }

    /// Union of the focal sets.
    pub fn support(&self) -> FocalSet {
        self.focal
            .iter()
            .fold(FocalSet::EMPTY, |acc, (s, _)| acc.union(*s))
    }

    /// Plausibility of each singleton: `pl(w) = sum of m(A) over A containing w`.
    pub fn contour(&self, k: usize) -> Vec<f64> {
        let mut pl = vec![0.0; k];
        for &(set, m) in &self.focal {
            for i in set.iter() {
                pl[i] += m;
            }
        }
        pl
    }
}

/// An evidential clustering: one mass function per object over a shared frame.
#[derive(Clone, Debug, PartialEq)]
pub struct SoftClustering {
    frame: Frame,
    masses: Vec<MassFunction>,
}

impl SoftClustering {
    pub fn new(frame: Frame, masses: Vec<MassFunction>) -> Result<Self> {
        if masses.is_empty() {
            return Err(Error::NoObjects);
        }
        let full = frame.full_set();
        for m in &masses {
            if let Some((s, _)) = m.focal().iter().find(|(s, _)| !s.is_subset_of(full)) {
                return Err(Error::FocalOutsideFrame {
                    set: s.bits(),
                    k: frame.k(),
                });
            }
        }
        Ok(SoftClustering { frame, masses })
    }

    pub(crate) fn from_parts(frame: Frame, masses: Vec<MassFunction>) -> Self {
        SoftClustering { frame, masses }
    }

    /// Fuzzy clustering from membership rows that each sum to one.
    pub fn from_memberships(frame: Frame, rows: &[Vec<f64>]) -> Result<Self> {
        let masses = rows
            .iter()
            .enumerate()
            .map(|(x, row)| {
                if row.len() != frame.k() {
                    return Err(Error::Schema(format!(
                        "object {x}: membership vector has {} entries, frame has {}",
                        row.len(),
                        frame.k()
                    )));
                }
                MassFunction::from_membership(row).map_err(|e| e.with_object(x))
            })
            .collect::<Result<Vec<_>>>()?;
        SoftClustering::new(frame, masses)
    }

    /// Rough clustering from one region per object.
    pub fn from_regions(frame: Frame, regions: &[FocalSet]) -> Result<Self> {
        let masses = regions
            .iter()
            .enumerate()
            .map(|(x, &r)| {
                if r.is_empty() {
                    Err(Error::EmptyFocalSet {
                        object: Some(x),
                        mass: 1.0,
                    })
                } else {
                    Ok(MassFunction::categorical(r))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SoftClustering::new(frame, masses)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn n(&self) -> usize {
        self.masses.len()
    }

    pub fn k(&self) -> usize {
        self.frame.k()
    }

    pub fn masses(&self) -> &[MassFunction] {
        &self.masses
    }

    pub fn mass_of(&self, object: usize) -> &MassFunction {
        &self.masses[object]
    }

    pub fn kind(&self) -> ScKind {
        classify(self)
    }

    /// The hard clustering, if every object is categorical on a singleton.
    pub fn as_hard(&self) -> Option<HardClustering> {
        let assignment = self
            .masses
            .iter()
            .map(|m| match m.focal() {
                [(s, _)] => s.single(),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        HardClustering::new(self.frame.clone(), assignment).ok()
    }

    /// Contour (plausibility) vector of every object.
    pub fn contours(&self) -> Vec<Vec<f64>> {
        self.masses.iter().map(|m| m.contour(self.k())).collect()
    }

    /// Argmax-of-contour hardening, ties to the lowest index.
    pub fn harden(&self) -> HardClustering {
        let assignment = self
            .contours()
            .iter()
            .map(|pl| {
                pl.iter()
                    .enumerate()
                    .fold((0, f64::NEG_INFINITY), |best, (i, &v)| {
                        if v > best.1 {
                            (i, v)
                        } else {
                            best
                        }
                    })
                    .0
            })
            .collect();
        HardClustering::new(self.frame.clone(), assignment).expect("argmax stays in frame")
    }

    /// Number of objects with more than one focal set or a non-singleton one.
    pub fn uncertain_objects(&self) -> usize {
        self.masses
            .iter()
            .filter(|m| !(m.is_logical() && m.focal()[0].0.is_singleton()))
            .count()
    }
}

/// Validate raw per-object focal maps keyed by label sets.
pub fn validate_soft_clustering<S: AsRef<str>>(
    frame: &Frame,
    raw: &[Vec<(Vec<S>, f64)>],
    policy: EmptySetPolicy,
) -> Result<SoftClustering> {
    let masses = raw
        .iter()
        .enumerate()
        .map(|(x, entries)| {
            let entries = entries
                .iter()
                .map(|(labels, m)| Ok((frame.set_of(labels)?, *m)))
                .collect::<Result<Vec<_>>>()?;
            MassFunction::new(&entries, frame.k(), policy).map_err(|e| e.with_object(x))
        })
        .collect::<Result<Vec<_>>>()?;
    SoftClustering::new(frame.clone(), masses)
}

/// The most specific family a soft clustering belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScKind {
    Hard,
    Rough,
    Fuzzy,
    Possibilistic,
    #[serde(rename = "evidential")]
    GeneralEvidential,
}

impl ScKind {
    /// Whether clusterings of this kind also satisfy the `other` predicate.
    pub fn satisfies(self, other: ScKind) -> bool {
        use ScKind::*;
        match (self, other) {
            (_, GeneralEvidential) => true,
            (Hard, _) => true,
            (Rough, Rough | Possibilistic) => true,
            (Fuzzy, Fuzzy) => true,
            (Possibilistic, Possibilistic) => true,
            _ => false,
        }
    }
}

impl fmt::Display for ScKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScKind::Hard => "hard",
            ScKind::Rough => "rough",
            ScKind::Fuzzy => "fuzzy",
            ScKind::Possibilistic => "possibilistic",
            ScKind::GeneralEvidential => "evidential",
        })
    }
}

pub fn is_hard(m: &SoftClustering) -> bool {
    m.masses()
        .iter()
        .all(|mx| mx.is_logical() && mx.focal()[0].0.is_singleton())
}

pub fn is_rough(m: &SoftClustering) -> bool {
    m.masses().iter().all(MassFunction::is_logical)
}

pub fn is_fuzzy(m: &SoftClustering) -> bool {
    m.masses().iter().all(MassFunction::is_bayesian)
}

pub fn is_possibilistic(m: &SoftClustering) -> bool {
    m.masses().iter().all(MassFunction::is_consonant)
}

pub fn classify(m: &SoftClustering) -> ScKind {
    if is_hard(m) {
        ScKind::Hard
    } else if is_rough(m) {
        ScKind::Rough
    } else if is_fuzzy(m) {
        ScKind::Fuzzy
    } else if is_possibilistic(m) {
        ScKind::Possibilistic
    } else {
        ScKind::GeneralEvidential
    }
}

/// Drop focal sets whose mass is below `threshold` and rescale.
///
/// The heaviest focal set of each object is always kept.
pub fn prune_masses(m: &SoftClustering, threshold: f64) -> SoftClustering {
    let masses = m
        .masses()
        .iter()
        .map(|mx| {
            let heaviest = mx
                .focal()
                .iter()
                .fold(mx.focal()[0], |b, &e| if e.1 > b.1 { e } else { b });
            let kept: Vec<_> = mx
                .focal()
                .iter()
                .copied()
                .filter(|&(s, w)| w >= threshold || s == heaviest.0)
                .collect();
            let total: f64 = kept.iter().map(|(_, w)| w).sum();
            MassFunction::from_sorted_unchecked(
                kept.into_iter().map(|(s, w)| (s, w / total)).collect(),
            )
        })
        .collect();
    SoftClustering::from_parts(m.frame().clone(), masses)
}

#[cfg(test)]
fn sums_to_one(values: impl Iterator<Item = f64>) -> bool {
    (values.sum::<f64>() - 1.0).abs() <= crate::TOLERANCE
}
