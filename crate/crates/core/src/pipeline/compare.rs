use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::distributional::{
    bounds_cost, distribution_over_rcs, distributional_evidential_rcs, distributional_fuzzy,
    distributional_possibilistic, evidential_expectations_with, expectation_summary, focal_rc_count,
    fuzzy_rand_expectation_fast, possibilistic_rc_distribution, rough_interval_with, uses_contingency, BoundsMethod,
    RcDistribution, RoughClustering, TNorm, DEFAULT_BUDGET, SUGGESTED_DELTA, SUGGESTED_EPSILON,
};
use crate::error::{fmt_count, Error, Result};
use crate::io::{
    round_seconds, sha256_hex, DistributionEntry, EnumerationCounts, EvalMode, EvaluationReport, InputInfo,
    Parameters, ReportResult, SamplingInfo,
};
use crate::metrics::{rand_evidential, BaseDistance, HardDistance, MassMetric, RandNormalization};
use crate::model::{classify, is_possibilistic, ScKind, SoftClustering};
use crate::sampling::{
    approx_expectation_fuzzy, approx_expectations_evidential, approx_expectations_possibilistic,
    approx_interval_rough, required_samples, ApproxResult, SampleMode, SamplePlan, DEFAULT_INNER_SAMPLES,
};

/// Which distributional reading to apply to the inputs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum View {
    /// The least general reading both inputs admit.
    #[default]
    Auto,
    Rough,
    Fuzzy,
    /// Possibility distribution of the distance under a t-norm.
    Possibilistic,
    /// Expectations over focal rough clusterings, per-object product law.
    Evidential,
    /// Expectations over the joint level cuts of consonant inputs.
    Joint,
    /// Pairwise-relation evidential Rand index.
    Relational,
}

impl FromStr for View {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => View::Auto,
            "rough" => View::Rough,
            "fuzzy" => View::Fuzzy,
            "possibilistic" => View::Possibilistic,
            "evidential" => View::Evidential,
            "joint" => View::Joint,
            "relational" => View::Relational,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareOptions {
    pub base: BaseDistance,
    pub mode: EvalMode,
    pub view: View,
    /// Explicit sample count; otherwise derived from `epsilon` and `delta`.
    pub samples: Option<u64>,
    pub epsilon: Option<f64>,
    pub delta: f64,
    pub sample_mode: Option<SampleMode>,
    pub inner_samples: usize,
    pub seed: u64,
    pub budget: u64,
    /// Exact interval bounds by enumeration (default) or, where it applies,
    /// by the contingency program.
    pub bounds: BoundsMethod,
    pub tnorm: TNorm,
    pub mass_metric: MassMetric,
    /// Include the full value distribution in exact expectation results.
    pub full_distribution: bool,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            base: BaseDistance::RAND,
            mode: EvalMode::Exact,
            view: View::Auto,
            samples: None,
            epsilon: None,
            delta: SUGGESTED_DELTA,
            sample_mode: None,
            inner_samples: DEFAULT_INNER_SAMPLES,
            seed: 0,
            budget: DEFAULT_BUDGET,
            bounds: BoundsMethod::Enumerate,
            tnorm: TNorm::default(),
            mass_metric: MassMetric::default(),
            full_distribution: false,
        }
    }
}

impl CompareOptions {
    pub fn sample_count(&self) -> Result<u64> {
        match (self.samples, self.epsilon) {
            (Some(s), _) => Ok(s),
            (None, Some(eps)) => required_samples(eps, self.delta),
            (None, None) => required_samples(SUGGESTED_EPSILON, self.delta),
        }
    }
}

/// A clustering together with where it was read from.
#[derive(Clone, Debug)]
pub struct Input {
    pub clustering: SoftClustering,
    pub path: Option<String>,
    pub sha256: Option<String>,
}

impl Input {
    pub fn new(clustering: SoftClustering) -> Self {
        Input {
            clustering,
            path: None,
            sha256: None,
        }
    }

    pub fn from_file(clustering: SoftClustering, path: &str, bytes: &[u8]) -> Self {
        Input {
            clustering,
            path: Some(path.to_string()),
            sha256: Some(sha256_hex(bytes)),
        }
    }

    fn info(&self) -> InputInfo {
        InputInfo {
            path: self.path.clone(),
            sha256: self.sha256.clone(),
            kind: classify(&self.clustering),
            n: self.clustering.n(),
        }
    }
}

/// The least general kind both clusterings belong to.
pub fn joint_kind(a: &SoftClustering, b: &SoftClustering) -> ScKind {
    let (ka, kb) = (classify(a), classify(b));
    [ScKind::Hard, ScKind::Rough, ScKind::Fuzzy, ScKind::Possibilistic, ScKind::GeneralEvidential]
        .into_iter()
        .find(|&k| ka.satisfies(k) && kb.satisfies(k))
        .expect("evidential admits everything")
}

/// Rough clustering of per-object supports. Every focal rough clustering of
/// `m` refines it, so its cost bounds the cost of any drawn pair.
fn support_rc(m: &SoftClustering) -> Option<RoughClustering> {
    RoughClustering::new(m.frame().clone(), m.masses().iter().map(|mx| mx.support()).collect()).ok()
}

fn worst_pair_cost<D: HardDistance + ?Sized>(
    a: &SoftClustering,
    b: &SoftClustering,
    d: &D,
    method: BoundsMethod,
) -> u128 {
    match (support_rc(a), support_rc(b)) {
        (Some(ra), Some(rb)) => bounds_cost(&ra, &rb, d, method),
        _ => u128::MAX,
    }
}

struct Outcome {
    measure: &'static str,
    result: ReportResult,
    enumeration: Option<EnumerationCounts>,
    sampling: Option<SamplingInfo>,
}

/// Compare two clusterings and report the value, interval or expectations
/// with timing.
pub fn compare(left: &Input, right: &Input, opts: &CompareOptions) -> Result<EvaluationReport> {
    let (a, b) = (&left.clustering, &right.clustering);
    if a.n() != b.n() {
        return Err(Error::MismatchedObjectCount {
            left: a.n(),
            right: b.n(),
        });
    }
    let started = Instant::now();
    let view = match opts.view {
        View::Auto => match joint_kind(a, b) {
            ScKind::Hard => None,
            ScKind::Rough => Some(View::Rough),
            ScKind::Fuzzy => Some(View::Fuzzy),
            ScKind::Possibilistic => Some(View::Joint),
            ScKind::GeneralEvidential => Some(View::Evidential),
        },
        v => Some(v),
    };
    let outcome = match (view, opts.mode) {
        (None, _) => hard_value(a, b, &opts.base)?,
        (Some(View::Relational), _) => Outcome {
            measure: "relational",
            result: ReportResult::value(1.0 - rand_evidential(a, b, opts.mass_metric)?),
            enumeration: None,
            sampling: None,
        },
        (Some(v), EvalMode::Exact) => exact(v, a, b, opts)?,
        (Some(v), EvalMode::Sampled) => sampled(v, a, b, opts)?,
    };
    let sampled = outcome.sampling.is_some();
    Ok(EvaluationReport {
        inputs: vec![left.info(), right.info()],
        measure: outcome.measure.to_string(),
        base: opts.base.to_string(),
        mode: if sampled { EvalMode::Sampled } else { EvalMode::Exact },
        parameters: Parameters {
            seed: opts.seed,
            budget: opts.budget,
            tnorm: (view == Some(View::Possibilistic)).then(|| opts.tnorm.to_string()),
            mass_metric: (view == Some(View::Relational)).then(|| opts.mass_metric.to_string()),
            bounds: (opts.bounds != BoundsMethod::Enumerate).then(|| opts.bounds.to_string()),
            epsilon: sampled.then(|| opts.epsilon).flatten(),
            delta: sampled.then_some(opts.delta),
        },
        result: outcome.result,
        enumeration: outcome.enumeration,
        sampling: outcome.sampling,
        seconds: round_seconds(started.elapsed()),
    })
}

fn hard_value(a: &SoftClustering, b: &SoftClustering, d: &BaseDistance) -> Result<Outcome> {
    let (ha, hb) = (a.as_hard().expect("hard"), b.as_hard().expect("hard"));
    Ok(Outcome {
        measure: "hard",
        result: ReportResult::value(d.distance(&ha, &hb)?),
        enumeration: Some(EnumerationCounts {
            focal_rcs: [1, 1],
            evaluated_pairs: 1,
            note: None,
        }),
        sampling: None,
    })
}

fn rough_pair(a: &SoftClustering, b: &SoftClustering) -> Result<(RoughClustering, RoughClustering)> {
    Ok((RoughClustering::from_soft(a)?, RoughClustering::from_soft(b)?))
}

fn rc_distribution(m: &SoftClustering, joint: bool, budget: u64) -> Result<RcDistribution> {
    if joint {
        possibilistic_rc_distribution(m)
    } else {
        distribution_over_rcs(m, budget)
    }
}

/// What the exact bounds walked through: compatible pairs, or transitions of
/// the contingency program where it ran.
fn walked<'a>(
    focal_rcs: [u128; 2],
    pairs: impl IntoIterator<Item = (&'a RoughClustering, &'a RoughClustering)>,
    d: &BaseDistance,
    method: BoundsMethod,
) -> EnumerationCounts {
    let (mut evaluated, mut transitions) = (0u128, 0u128);
    for (r1, r2) in pairs {
        if uses_contingency(r1, r2, d, method) {
            transitions = transitions.saturating_add(bounds_cost(r1, r2, d, method));
        } else {
            evaluated = evaluated.saturating_add(r1.compatible_count().saturating_mul(r2.compatible_count()));
        }
    }
    EnumerationCounts {
        focal_rcs,
        evaluated_pairs: evaluated,
        note: (transitions > 0)
            .then(|| format!("contingency-table bounds, at most {} transitions", fmt_count(transitions))),
    }
}

fn entries_of<I: IntoIterator<Item = (Vec<f64>, f64)>>(it: I) -> Vec<DistributionEntry> {
    it.into_iter()
        .map(|(values, weight)| DistributionEntry { values, weight })
        .collect()
}

fn exact(view: View, a: &SoftClustering, b: &SoftClustering, opts: &CompareOptions) -> Result<Outcome> {
    let d = &opts.base;
    match view {
        View::Rough => {
            let (r1, r2) = rough_pair(a, b)?;
            let iv = rough_interval_with(&r1, &r2, d, opts.budget, opts.bounds)?;
            Ok(Outcome {
                measure: "rough",
                result: ReportResult::interval(iv.lower, iv.upper),
                enumeration: Some(walked([1, 1], [(&r1, &r2)], d, opts.bounds)),
                sampling: None,
            })
        }
        View::Fuzzy if !opts.full_distribution && *d == BaseDistance::Rand(RandNormalization::UnorderedPairs) => {
            let e = fuzzy_rand_expectation_fast(a, b)?;
            Ok(Outcome {
                measure: "fuzzy",
                result: ReportResult::expectations(e, e, None),
                enumeration: Some(EnumerationCounts {
                    focal_rcs: [focal_rc_count(a), focal_rc_count(b)],
                    evaluated_pairs: 0,
                    note: Some("closed-form pairwise expectation, nothing enumerated".into()),
                }),
                sampling: None,
            })
        }
        View::Fuzzy => {
            let dist = distributional_fuzzy(a, b, d, opts.budget)?;
            let e = dist.expectation();
            Ok(Outcome {
                measure: "fuzzy",
                result: ReportResult::expectations(
                    e,
                    e,
                    Some(entries_of(dist.entries.iter().map(|&(v, w)| (vec![v], w)))),
                ),
                enumeration: Some(EnumerationCounts {
                    focal_rcs: [focal_rc_count(a), focal_rc_count(b)],
                    evaluated_pairs: focal_rc_count(a).saturating_mul(focal_rc_count(b)),
                    note: None,
                }),
                sampling: None,
            })
        }
        View::Possibilistic => {
            let dist = distributional_possibilistic(a, b, d, opts.tnorm, opts.budget)?;
            let count = |m: &SoftClustering| m.contours().iter().fold(1u128, |acc, pi| {
                acc.saturating_mul(pi.iter().filter(|&&v| v > 0.0).count() as u128)
            });
            Ok(Outcome {
                measure: "possibilistic",
                result: ReportResult::Possibility {
                    distribution: entries_of(dist.entries.iter().map(|&(v, w)| (vec![v], w))),
                },
                enumeration: Some(EnumerationCounts {
                    focal_rcs: [focal_rc_count(a), focal_rc_count(b)],
                    evaluated_pairs: count(a).saturating_mul(count(b)),
                    note: None,
                }),
                sampling: None,
            })
        }
        View::Evidential | View::Joint => {
            let joint = view == View::Joint;
            for m in [a, b] {
                if joint && !is_possibilistic(m) {
                    return Err(Error::NotPossibilistic);
                }
            }
            let d1 = rc_distribution(a, joint, opts.budget)?;
            let d2 = rc_distribution(b, joint, opts.budget)?;
            let (lo, hi, distribution) = if opts.full_distribution {
                let mass = distributional_evidential_rcs(&d1, &d2, d, opts.budget)?;
                let s = expectation_summary(&mass);
                let entries = entries_of(mass.entries.iter().map(|(vs, w)| (vs.values().to_vec(), *w)));
                (s.lower_expectation, s.upper_expectation, Some(entries))
            } else {
                let s = evidential_expectations_with(&d1, &d2, d, opts.budget, opts.bounds)?;
                (s.lower_expectation, s.upper_expectation, None)
            };
            Ok(Outcome {
                measure: if joint { "joint" } else { "evidential" },
                result: ReportResult::expectations(lo, hi, distribution),
                enumeration: Some(walked(
                    [d1.len() as u128, d2.len() as u128],
                    d1.focal().iter().flat_map(|(r1, _)| d2.focal().iter().map(move |(r2, _)| (r1, r2))),
                    d,
                    if opts.full_distribution { BoundsMethod::Enumerate } else { opts.bounds },
                )),
                sampling: None,
            })
        }
        View::Auto | View::Relational => unreachable!("resolved by the caller"),
    }
}

fn sampled(view: View, a: &SoftClustering, b: &SoftClustering, opts: &CompareOptions) -> Result<Outcome> {
    let d = &opts.base;
    let samples = opts.sample_count()?;
    let plan = |mode| SamplePlan {
        samples,
        epsilon: opts.epsilon.unwrap_or(SUGGESTED_EPSILON),
        delta: opts.delta,
        mode,
        inner_samples: opts.inner_samples,
        seed: opts.seed,
        budget: opts.budget,
        bounds: opts.bounds,
    };
    let info = |r: &ApproxResult, plan: &SamplePlan| SamplingInfo {
        samples: r.samples_used,
        delta: plan.delta,
        hoeffding_epsilon: r.hoeffding_epsilon,
        sample_mode: plan.mode,
        inner_samples: (plan.mode == SampleMode::EvidentialNested).then_some(plan.inner_samples),
        warning: r.warning.clone(),
    };
    let (measure, p, r) = match view {
        View::Rough => {
            let (r1, r2) = rough_pair(a, b)?;
            let p = plan(SampleMode::RoughInterval);
            let r = approx_interval_rough(&r1, &r2, d, &p)?;
            return Ok(Outcome {
                measure: "rough",
                result: ReportResult::interval(r.lower_estimate, r.upper_estimate),
                enumeration: None,
                sampling: Some(info(&r, &p)),
            });
        }
        View::Fuzzy => {
            let p = plan(SampleMode::FuzzyExpectation);
            let r = approx_expectation_fuzzy(a, b, d, &p)?;
            ("fuzzy", p, r)
        }
        View::Evidential | View::Joint => {
            let mode = opts.sample_mode.unwrap_or_else(|| {
                if worst_pair_cost(a, b, d, opts.bounds).saturating_mul(samples as u128) > opts.budget as u128 {
                    SampleMode::EvidentialNested
                } else {
                    SampleMode::EvidentialExactInner
                }
            });
            let p = plan(mode);
            if view == View::Joint {
                ("joint", p.clone(), approx_expectations_possibilistic(a, b, d, &p)?)
            } else {
                ("evidential", p.clone(), approx_expectations_evidential(a, b, d, &p)?)
            }
        }
        View::Possibilistic => {
            return Err(Error::InvalidConfig(
                "the possibility distribution has no sampled estimator; use --view joint".into(),
            ))
        }
        View::Auto | View::Relational => unreachable!("resolved by the caller"),
    };
    Ok(Outcome {
        measure,
        result: ReportResult::expectations(r.lower_estimate, r.upper_estimate, None),
        enumeration: None,
        sampling: Some(info(&r, &p)),
    })
}
