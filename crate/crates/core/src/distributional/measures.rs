use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distributional::counting::RoughVsHard;
use crate::distributional::enumerate::{ensure_budget, walk_pairs, Combine, GrayWalk, Side};
use crate::distributional::values::ValueAccumulator;
use crate::distributional::{
    DistributionKind, ExpectationSummary, IntervalSummary, RoughClustering, ValueDistribution, ValueSet,
    ValueSetMass,
};
use crate::error::{Error, Result};
use crate::metrics::HardDistance;
use crate::model::{is_fuzzy, is_possibilistic, FocalSet, Frame, SoftClustering};
use crate::TOLERANCE;

/// Default cap on enumeration steps for exact computations.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TNorm {
    /// Minimum, with maximum as its dual s-conorm.
    #[default]
    Min,
    /// Product, with the probabilistic sum as its dual s-conorm.
    Product,
}

impl TNorm {
    pub fn t(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Min => a.min(b),
            TNorm::Product => a * b,
        }
    }

    pub fn s(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Min => a.max(b),
            TNorm::Product => a + b - a * b,
        }
    }

    fn combine(self) -> Combine {
        match self {
            TNorm::Min => Combine::Min,
            TNorm::Product => Combine::Product,
        }
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TNorm::Min => "min",
            TNorm::Product => "product",
        })
    }
}

impl FromStr for TNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(TNorm::Min),
            "product" | "prod" => Ok(TNorm::Product),
            other => Err(Error::UnknownTNorm(other.to_string())),
        }
    }
}

/// How exact interval bounds are obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundsMethod {
    /// Visit every compatible pair.
    #[default]
    Enumerate,
    /// Against a hard clustering under a Rand distance, optimize over
    /// contingency tables instead; other pairs fall back to enumeration.
    Contingency,
}

impl fmt::Display for BoundsMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundsMethod::Enumerate => "enumerate",
            BoundsMethod::Contingency => "contingency",
        })
    }
}

impl FromStr for BoundsMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumerate" | "enumeration" => Ok(BoundsMethod::Enumerate),
            "contingency" => Ok(BoundsMethod::Contingency),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// A probability distribution over rough clusterings (the focal RCs of a
/// soft clustering).
#[derive(Clone, Debug, PartialEq)]
pub struct RcDistribution {
    frame: Frame,
    focal: Vec<(RoughClustering, f64)>,
}

impl RcDistribution {
    pub fn new(frame: Frame, focal: Vec<(RoughClustering, f64)>) -> Result<Self> {
        if focal.is_empty() {
            return Err(Error::NoObjects);
        }
        if let Some(&(_, m)) = focal.iter().find(|(_, m)| !(*m > 0.0)) {
            return Err(Error::InvalidMass { object: None, mass: m });
        }
        let total: f64 = focal.iter().map(|(_, m)| m).sum();
        if (total - 1.0).abs() > TOLERANCE {
            return Err(Error::MassSumViolation { object: None, sum: total });
        }
        Ok(RcDistribution { frame, focal })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn focal(&self) -> &[(RoughClustering, f64)] {
        &self.focal
    }

    pub fn len(&self) -> usize {
        self.focal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.focal.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.focal.iter().map(|(_, m)| m).sum()
    }

    /// Sum over focal RCs of their compatible-set sizes.
    pub fn compatible_total(&self) -> u128 {
        self.focal
            .iter()
            .fold(0u128, |acc, (r, _)| acc.saturating_add(r.compatible_count()))
    }

    pub fn mass_of(&self, r: &RoughClustering) -> f64 {
        self.focal.iter().filter(|(f, _)| f == r).map(|(_, m)| m).sum()
    }
}

/// Number of focal RCs: the product of per-object focal counts.
pub fn focal_rc_count(m: &SoftClustering) -> u128 {
    m.masses()
        .iter()
        .fold(1u128, |acc, mx| acc.saturating_mul(mx.focal().len() as u128))
}

/// The product distribution over rough clusterings: each focal RC picks one
/// focal set per object and weighs the product of the picked masses.
pub fn distribution_over_rcs(m: &SoftClustering, budget: u64) -> Result<RcDistribution> {
    ensure_budget(focal_rc_count(m), budget)?;
    let side = Side::new(
        m.masses()
            .iter()
            .map(|mx| mx.focal().iter().map(|&(s, w)| (s.bits() as usize, w)).collect())
            .collect(),
        m.k(),
    );
    let mut regions: Vec<FocalSet> = side.base.iter().map(|&b| FocalSet::from_bits(b as u64)).collect();
    let fixed: f64 = m
        .masses()
        .iter()
        .filter(|mx| mx.focal().len() == 1)
        .map(|mx| mx.focal()[0].1)
        .product();
    let mut walk = GrayWalk::new(side.choices.iter().map(Vec::len).collect());
    let mut focal = Vec::new();
    loop {
        let mass = walk
            .digits()
            .iter()
            .enumerate()
            .fold(fixed, |acc, (c, &d)| acc * side.weights[c][d]);
        focal.push((RoughClustering::new(m.frame().clone(), regions.clone())?, mass));
        match walk.step() {
            Some((c, _, new)) => {
                regions[side.objects[c]] = FocalSet::from_bits(side.choices[c][new] as u64)
            }
            None => break,
        }
    }
    Ok(RcDistribution {
        frame: m.frame().clone(),
        focal,
    })
}

/// Consonant distribution over rough clusterings equivalent to the joint
/// possibility `Poss(C) = min_x pi_x(C(x))`: each distinct level `p` carries
/// mass `p - p_next` on the rough clustering of per-object `p`-cuts.
pub fn possibilistic_rc_distribution(p: &SoftClustering) -> Result<RcDistribution> {
    if !is_possibilistic(p) {
        return Err(Error::NotPossibilistic);
    }
    let contours = p.contours();
    for pi in &contours {
        let max = pi.iter().copied().fold(0.0, f64::max);
        if (max - 1.0).abs() > TOLERANCE {
            return Err(Error::SubnormalPossibility { max });
        }
    }
    let mut levels: Vec<f64> = contours.iter().flatten().copied().filter(|&v| v > TOLERANCE).collect();
    levels.sort_by(|a, b| b.total_cmp(a));
    levels.dedup_by(|a, b| (*a - *b).abs() <= TOLERANCE);
    levels[0] = 1.0;
    let mut focal = Vec::with_capacity(levels.len());
    for (i, &level) in levels.iter().enumerate() {
        let next = levels.get(i + 1).copied().unwrap_or(0.0);
        let regions = contours
            .iter()
            .map(|pi| {
                FocalSet::from_indices(
                    pi.iter()
                        .enumerate()
                        .filter(|(_, &v)| v >= level - TOLERANCE)
                        .map(|(w, _)| w),
                )
            })
            .collect();
        focal.push((RoughClustering::new(p.frame().clone(), regions)?, level - next));
    }
    Ok(RcDistribution {
        frame: p.frame().clone(),
        focal,
    })
}

fn rough_pair_budget(r1: &RoughClustering, r2: &RoughClustering, budget: u64) -> Result<()> {
    ensure_budget(r1.compatible_count().saturating_mul(r2.compatible_count()), budget)
}

fn rough_values<D: HardDistance + ?Sized>(r1: &RoughClustering, r2: &RoughClustering, d: &D) -> Result<ValueSet> {
    let mut acc = ValueAccumulator::default();
    walk_pairs(&Side::from_rough(r1), &Side::from_rough(r2), d, Combine::Product, |v, _, _| {
        acc.add(v, 0.0, |a, _| a)
    })?;
    Ok(ValueSet::from_values(acc.into_entries().into_iter().map(|e| e.0)))
}

fn contingency<'a>(
    r1: &'a RoughClustering,
    r2: &'a RoughClustering,
    d: &(impl HardDistance + ?Sized),
    method: BoundsMethod,
) -> Option<(RoughVsHard<'a>, crate::metrics::RandNormalization)> {
    if method != BoundsMethod::Contingency {
        return None;
    }
    Some((RoughVsHard::new(r1, r2)?, d.rand_normalization()?))
}

fn rough_minmax<D: HardDistance + ?Sized>(
    r1: &RoughClustering,
    r2: &RoughClustering,
    d: &D,
    method: BoundsMethod,
) -> Result<IntervalSummary> {
    if let Some((dp, norm)) = contingency(r1, r2, d, method) {
        return Ok(dp.bounds(norm));
    }
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    walk_pairs(&Side::from_rough(r1), &Side::from_rough(r2), d, Combine::Product, |v, _, _| {
        lo = lo.min(v);
        hi = hi.max(v);
    })?;
    Ok(IntervalSummary { lower: lo, upper: hi })
}

/// Whether the bounds of this pair come from the contingency program.
pub(crate) fn uses_contingency<D: HardDistance + ?Sized>(
    r1: &RoughClustering,
    r2: &RoughClustering,
    d: &D,
    method: BoundsMethod,
) -> bool {
    contingency(r1, r2, d, method).is_some()
}

/// Work needed for the bounds of one pair: DP transitions when the
/// contingency program runs, compatible pairs otherwise.
pub(crate) fn bounds_cost<D: HardDistance + ?Sized>(
    r1: &RoughClustering,
    r2: &RoughClustering,
    d: &D,
    method: BoundsMethod,
) -> u128 {
    match contingency(r1, r2, d, method) {
        Some((dp, _)) => dp.cost(),
        None => r1.compatible_count().saturating_mul(r2.compatible_count()),
    }
}

/// All distances between clusterings compatible with `r1` and `r2`.
pub fn distributional_rough<D: HardDistance + ?Sized>(
    r1: &RoughClustering,
    r2: &RoughClustering,
    d: &D,
    budget: u64,
) -> Result<ValueSet> {
    rough_pair_budget(r1, r2, budget)?;
    rough_values(r1, r2, d)
}

/// Minimum and maximum of [`distributional_rough`] without materializing
/// the set, visiting every compatible pair.
pub fn rough_interval<D: HardDistance + ?Sized>(
    r1: &RoughClustering,
    r2: &RoughClustering,
    d: &D,
    budget: u64,
) -> Result<IntervalSummary> {
    rough_interval_with(r1, r2, d, budget, BoundsMethod::Enumerate)
}

/// [`rough_interval`] with a choice of bounds method. The budget counts
/// DP transitions for pairs handled by the contingency program.
pub fn rough_interval_with<D: HardDistance + ?Sized>(
    r1: &RoughClustering,
    r2: &RoughClustering,
    d: &D,
    budget: u64,
    method: BoundsMethod,
) -> Result<IntervalSummary> {
    ensure_budget(bounds_cost(r1, r2, d, method), budget)?;
    rough_minmax(r1, r2, d, method)
}

fn membership_side(m: &SoftClustering) -> Side {
    let weights = m.contours();
    Side::new(
        weights
            .iter()
            .map(|w| {
                w.iter()
                    .enumerate()
                    .filter(|(_, &v)| v > 0.0)
                    .map(|(c, &v)| (c, v))
                    .collect()
            })
            .collect(),
        m.k(),
    )
}

/// Pushforward of the product distribution of two fuzzy clusterings
/// through the base distance.
pub fn distributional_fuzzy<D: HardDistance + ?Sized>(
    f1: &SoftClustering,
    f2: &SoftClustering,
    d: &D,
    budget: u64,
) -> Result<ValueDistribution> {
    if !is_fuzzy(f1) || !is_fuzzy(f2) {
        return Err(Error::NotFuzzy);
    }
    let (s1, s2) = (membership_side(f1), membership_side(f2));
    ensure_budget(s1.count().saturating_mul(s2.count()), budget)?;
    let mut acc = ValueAccumulator::default();
    walk_pairs(&s1, &s2, d, Combine::Product, |v, w1, w2| acc.add(v, w1 * w2, |a, b| a + b))?;
    Ok(ValueDistribution {
        kind: DistributionKind::Probability,
        entries: acc.into_entries(),
    })
}

/// Possibility of each distance value: the s-conorm, over compatible
/// pairs at that distance, of the t-norm of their joint possibilities.
pub fn distributional_possibilistic<D: HardDistance + ?Sized>(
    p1: &SoftClustering,
    p2: &SoftClustering,
    d: &D,
    tnorm: TNorm,
    budget: u64,
) -> Result<ValueDistribution> {
    for p in [p1, p2] {
        if !is_possibilistic(p) && !is_fuzzy(p) {
            return Err(Error::NotPossibilistic);
        }
    }
    let (s1, s2) = (membership_side(p1), membership_side(p2));
    ensure_budget(s1.count().saturating_mul(s2.count()), budget)?;
    let mut acc = ValueAccumulator::default();
    walk_pairs(&s1, &s2, d, tnorm.combine(), |v, w1, w2| {
        acc.add(v, tnorm.t(w1, w2), |a, b| tnorm.s(a, b))
    })?;
    Ok(ValueDistribution {
        kind: DistributionKind::Possibility,
        entries: acc.into_entries(),
    })
}

fn evidential_budget(d1: &RcDistribution, d2: &RcDistribution, budget: u64) -> Result<()> {
    ensure_budget(d1.compatible_total().saturating_mul(d2.compatible_total()), budget)
}

/// Mass over value sets induced by two soft clusterings.
pub fn distributional_evidential<D: HardDistance + ?Sized>(
    m1: &SoftClustering,
    m2: &SoftClustering,
    d: &D,
    budget: u64,
) -> Result<ValueSetMass> {
    let d1 = distribution_over_rcs(m1, budget)?;
    let d2 = distribution_over_rcs(m2, budget)?;
    distributional_evidential_rcs(&d1, &d2, d, budget)
}

/// [`distributional_evidential`] from precomputed RC distributions.
pub fn distributional_evidential_rcs<D: HardDistance + ?Sized>(
    d1: &RcDistribution,
    d2: &RcDistribution,
    d: &D,
    budget: u64,
) -> Result<ValueSetMass> {
    evidential_budget(d1, d2, budget)?;
    let partials = d1
        .focal()
        .par_iter()
        .map(|(r1, m1)| {
            let mut part = ValueSetMass::default();
            for (r2, m2) in d2.focal() {
                part.add(rough_values(r1, r2, d)?, m1 * m2);
            }
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = ValueSetMass::default();
    for p in partials {
        out.merge(p);
    }
    Ok(out)
}

/// Lower and upper expectations of the evidential measure, computed from
/// per-pair minima and maxima only.
pub fn evidential_expectations<D: HardDistance + ?Sized>(
    d1: &RcDistribution,
    d2: &RcDistribution,
    d: &D,
    budget: u64,
) -> Result<ExpectationSummary> {
    evidential_expectations_with(d1, d2, d, budget, BoundsMethod::Enumerate)
}

/// [`evidential_expectations`] with a choice of bounds method.
pub fn evidential_expectations_with<D: HardDistance + ?Sized>(
    d1: &RcDistribution,
    d2: &RcDistribution,
    d: &D,
    budget: u64,
    method: BoundsMethod,
) -> Result<ExpectationSummary> {
    ensure_budget((d1.len() as u128).saturating_mul(d2.len() as u128), budget)?;
    let cost = d1
        .focal()
        .par_iter()
        .map(|(r1, _)| {
            d2.focal()
                .iter()
                .fold(0u128, |acc, (r2, _)| acc.saturating_add(bounds_cost(r1, r2, d, method)))
        })
        .reduce(|| 0, u128::saturating_add);
    ensure_budget(cost, budget)?;
    let terms = d1
        .focal()
        .par_iter()
        .map(|(r1, m1)| {
            let (mut lo, mut hi) = (0.0, 0.0);
            for (r2, m2) in d2.focal() {
                let iv = rough_minmax(r1, r2, d, method)?;
                lo += m1 * m2 * iv.lower;
                hi += m1 * m2 * iv.upper;
            }
            Ok((lo, hi))
        })
        .collect::<Result<Vec<_>>>()?;
    let (lo, hi) = terms.iter().fold((0.0, 0.0), |acc, t| (acc.0 + t.0, acc.1 + t.1));
    Ok(ExpectationSummary {
        lower_expectation: lo,
        upper_expectation: hi,
    })
}
