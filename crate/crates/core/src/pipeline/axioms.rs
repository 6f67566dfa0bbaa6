use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distributional::{compatible_classes, rough_interval, RoughClustering, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::metrics::{all_partitions, check_axioms, check_axioms_restricted, AxiomReport, BaseDistance, HardDistance};
use crate::model::{FocalSet, Frame, HardClustering};
use crate::pipeline::random::{random_hard, random_rough_any};
use crate::sampling::stream_rng;

/// Which function over which clusterings to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomFamily {
    /// The base distance on hard clusterings.
    Hard,
    /// Upper interval bound on rough clusterings, all pairs.
    Upper,
    /// Upper interval bound, only pairs with at least one hard clustering.
    UpperVsHard,
    /// Lower interval bound on rough clusterings.
    Lower,
}

impl FromStr for AxiomFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hard" => AxiomFamily::Hard,
            "upper" => AxiomFamily::Upper,
            "upper-vs-hard" => AxiomFamily::UpperVsHard,
            "lower" => AxiomFamily::Lower,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomOptions {
    pub base: BaseDistance,
    pub family: AxiomFamily,
    pub n: usize,
    pub k: usize,
    /// Enumerate every clustering of the family instead of drawing `count`.
    pub exhaustive: bool,
    pub count: usize,
    pub seed: u64,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            base: BaseDistance::RAND,
            family: AxiomFamily::Hard,
            n: 4,
            k: 2,
            exhaustive: false,
            count: 20,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomOutcome {
    pub family: AxiomFamily,
    pub base: String,
    /// Human-readable form of each checked clustering, indexed like the
    /// counterexample points.
    pub points: Vec<String>,
    pub verdict: String,
    pub report: AxiomReport,
}

impl AxiomOutcome {
    pub fn render(&self) -> String {
        let r = &self.report;
        let mut out = String::new();
        let _ = writeln!(out, "{} points, verdict: {}", self.points.len(), self.verdict);
        for (name, ok) in [
            ("M1  d(x,x) = 0", r.holds_m1),
            ("M1b d(x,y) = 0 => x = y", r.holds_m1b),
            ("M2  x != y => d(x,y) > 0", r.holds_m2),
            ("M3  symmetry", r.holds_m3),
            ("M4  triangle inequality", r.holds_m4),
            ("normalized", r.is_normalized),
        ] {
            let _ = writeln!(out, "  {:<28} {}", name, if ok { "holds" } else { "FAILS" });
        }
        for c in &r.counterexamples {
            let pts: Vec<&str> = c.points.iter().map(|&i| self.points[i].as_str()).collect();
            let vals: Vec<String> = c.values.iter().map(|v| format!("{v:.4}")).collect();
            let _ = writeln!(out, "  {:?}: {} -> [{}]", c.axiom, pts.join(" ; "), vals.join(", "));
        }
        out
    }
}

fn describe(r: &RoughClustering) -> String {
    let parts: Vec<String> = r
        .regions()
        .iter()
        .map(|s| {
            let labels = r.frame().labels_of(*s);
            if labels.len() == 1 {
                labels[0].clone()
            } else {
                format!("{{{}}}", labels.join(","))
            }
        })
        .collect();
    format!("[{}]", parts.join(" "))
}

fn all_rough(n: usize, k: usize) -> Vec<RoughClustering> {
    let frame = Frame::with_size(k).expect("k >= 1");
    let choices: Vec<FocalSet> = (1..1u64 << k).map(FocalSet::from_bits).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        out.push(RoughClustering::new(frame.clone(), idx.iter().map(|&i| choices[i]).collect()).expect("nonempty"));
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < choices.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn all_hard(n: usize, k: usize) -> Vec<RoughClustering> {
    let frame = Frame::with_size(k).expect("k >= 1");
    all_partitions(n)
        .into_iter()
        .filter(|p| p.iter().all(|&c| c < k))
        .map(|p| RoughClustering::from_hard(&HardClustering::new(frame.clone(), p).expect("labels < k")))
        .collect()
}

fn points(opts: &AxiomOptions) -> Vec<RoughClustering> {
    let mut rng = stream_rng(opts.seed, 0);
    let hard = || -> Vec<RoughClustering> {
        if opts.exhaustive {
            all_hard(opts.n, opts.k)
        } else {
            let mut rng = stream_rng(opts.seed, 1);
            (0..opts.count)
                .map(|_| RoughClustering::from_hard(&random_hard(opts.n, opts.k, &mut rng)))
                .collect()
        }
    };
    let mut rough = || -> Vec<RoughClustering> {
        if opts.exhaustive {
            all_rough(opts.n, opts.k)
        } else {
            (0..opts.count).map(|_| random_rough_any(opts.n, opts.k, &mut rng)).collect()
        }
    };
    match opts.family {
        AxiomFamily::Hard => hard(),
        AxiomFamily::Upper | AxiomFamily::Lower => rough(),
        AxiomFamily::UpperVsHard => {
            let mut pts = hard();
            pts.extend(rough().into_iter().filter(|r| !r.is_hard()));
            pts
        }
    }
}

/// Check the metric axioms for the chosen family. Clusterings count as
/// equal when they admit the same hard clusterings up to relabeling.
pub fn run_axioms(opts: &AxiomOptions) -> Result<AxiomOutcome> {
    if opts.n < 2 || opts.k < 1 {
        return Err(Error::InvalidConfig("axiom checks need n >= 2 and k >= 1".into()));
    }
    let pts = points(opts);
    check_family(opts.family, &opts.base, pts)
}

/// [`run_axioms`] over an explicit list of rough clusterings.
pub fn check_family(family: AxiomFamily, base: &BaseDistance, pts: Vec<RoughClustering>) -> Result<AxiomOutcome> {
    let classes = pts
        .iter()
        .map(|r| compatible_classes(r, DEFAULT_BUDGET).map(|c| c.into_iter().collect::<BTreeSet<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let idx: Vec<usize> = (0..pts.len()).collect();
    let bound = |i: &usize, j: &usize, upper: bool| {
        let iv = rough_interval(&pts[*i], &pts[*j], base, DEFAULT_BUDGET).expect("small instances");
        if upper {
            iv.upper
        } else {
            iv.lower
        }
    };
    let eq = |i: &usize, j: &usize| classes[*i] == classes[*j];
    let report = match family {
        AxiomFamily::Hard => {
            let hard: Vec<HardClustering> = pts.iter().map(|r| r.as_hard().expect("hard points")).collect();
            check_axioms(&idx, |i, j| base.distance(&hard[*i], &hard[*j]).expect("same n"), eq)
        }
        AxiomFamily::Upper => check_axioms(&idx, |i, j| bound(i, j, true), eq),
        AxiomFamily::Lower => check_axioms(&idx, |i, j| bound(i, j, false), eq),
        AxiomFamily::UpperVsHard => check_axioms_restricted(&idx, |i, j| bound(i, j, true), eq, |i, j| {
            pts[*i].is_hard() || pts[*j].is_hard()
        }),
    };
    Ok(AxiomOutcome {
        family,
        base: base.to_string(),
        points: pts.iter().map(describe).collect(),
        verdict: report.verdict().to_string(),
        report,
    })
}
