use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::fmt_count;
use crate::model::ScKind;
use crate::sampling::SampleMode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalMode {
    Exact,
    Sampled,
}

/// Where an input came from and what it turned out to be.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputInfo {
    pub path: Option<String>,
    pub sha256: Option<String>,
    pub kind: ScKind,
    pub n: usize,
}

/// Hex SHA-256 digest of raw file bytes.
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub seed: u64,
    pub budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tnorm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass_metric: Option<String>,
    /// Set when exact bounds may come from the contingency program.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
}

/// Sizes of what the exact computation walked through.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerationCounts {
    /// Focal rough clusterings on each side.
    pub focal_rcs: [u128; 2],
    /// Pairs of hard clusterings whose distance was evaluated.
    pub evaluated_pairs: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplingInfo {
    pub samples: u64,
    pub delta: f64,
    pub hoeffding_epsilon: f64,
    pub sample_mode: SampleMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner_samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// A measured quantity. Distances are reported together with the matching
/// similarity `1 - distance`; for ranges the endpoints swap.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ReportResult {
    Value {
        distance: f64,
        similarity: f64,
    },
    Interval {
        distance: [f64; 2],
        similarity: [f64; 2],
    },
    Expectations {
        distance: [f64; 2],
        similarity: [f64; 2],
        #[serde(skip_serializing_if = "Option::is_none")]
        distribution: Option<Vec<DistributionEntry>>,
    },
    Possibility {
        distribution: Vec<DistributionEntry>,
    },
}

/// One atom of a reported distribution: a set of distance values (a single
/// value for probability and possibility distributions) and its weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionEntry {
    pub values: Vec<f64>,
    pub weight: f64,
}

impl ReportResult {
    pub fn value(distance: f64) -> Self {
        ReportResult::Value {
            distance,
            similarity: 1.0 - distance,
        }
    }

    pub fn interval(lower: f64, upper: f64) -> Self {
        ReportResult::Interval {
            distance: [lower, upper],
            similarity: [1.0 - upper, 1.0 - lower],
        }
    }

    pub fn expectations(lower: f64, upper: f64, distribution: Option<Vec<DistributionEntry>>) -> Self {
        ReportResult::Expectations {
            distance: [lower, upper],
            similarity: [1.0 - upper, 1.0 - lower],
            distribution,
        }
    }

    /// Distance range `[lower, upper]`, a point for single values.
    pub fn distance_range(&self) -> Option<[f64; 2]> {
        match self {
            ReportResult::Value { distance, .. } => Some([*distance, *distance]),
            ReportResult::Interval { distance, .. } | ReportResult::Expectations { distance, .. } => Some(*distance),
            ReportResult::Possibility { .. } => None,
        }
    }

    pub fn similarity_range(&self) -> Option<[f64; 2]> {
        self.distance_range().map(|[lo, hi]| [1.0 - hi, 1.0 - lo])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub inputs: Vec<InputInfo>,
    pub measure: String,
    pub base: String,
    pub mode: EvalMode,
    pub parameters: Parameters,
    pub result: ReportResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<SamplingInfo>,
    /// Wall-clock seconds, rounded to milliseconds.
    pub seconds: f64,
}

pub fn round_seconds(d: Duration) -> f64 {
    (d.as_secs_f64() * 1000.0).round() / 1000.0
}

pub fn fmt_range(r: [f64; 2]) -> String {
    if r[0] == r[1] {
        format!("{:.3}", r[0])
    } else {
        format!("({:.3}, {:.3})", r[0], r[1])
    }
}

impl EvaluationReport {
    /// The report without its wall time, for reproducibility checks.
    pub fn payload(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("seconds");
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain-text rendering, one field per line.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for (i, input) in self.inputs.iter().enumerate() {
            let _ = writeln!(
                out,
                "input {}      {} ({}, n={})",
                i + 1,
                input.path.as_deref().unwrap_or("-"),
                input.kind,
                input.n
            );
        }
        let _ = writeln!(out, "measure      {}", self.measure);
        let _ = writeln!(out, "base         {}", self.base);
        let mode = match self.mode {
            EvalMode::Exact => "exact",
            EvalMode::Sampled => "sampled",
        };
        let _ = writeln!(out, "mode         {mode}");
        let _ = writeln!(out, "seed         {}", self.parameters.seed);
        match &self.result {
            ReportResult::Possibility { distribution } => {
                let _ = writeln!(out, "possibility");
                for e in distribution {
                    let _ = writeln!(out, "  {:.6}  {:.6}", e.values[0], e.weight);
                }
            }
            r => {
                let label = match r {
                    ReportResult::Expectations { .. } => "expectation",
                    ReportResult::Interval { .. } => "interval",
                    _ => "value",
                };
                let _ = writeln!(out, "distance     {} {label}", fmt_range(r.distance_range().expect("range")));
                let _ = writeln!(out, "similarity   {}", fmt_range(r.similarity_range().expect("range")));
            }
        }
        if let Some(e) = &self.enumeration {
            let _ = writeln!(
                out,
                "enumerated   {} x {} focal RCs, {} pairs",
                fmt_count(e.focal_rcs[0]),
                fmt_count(e.focal_rcs[1]),
                fmt_count(e.evaluated_pairs)
            );
            if let Some(note) = &e.note {
                let _ = writeln!(out, "note         {note}");
            }
        }
        if let Some(s) = &self.sampling {
            let _ = writeln!(out, "samples      {} (+/- {:.4} at delta {})", s.samples, s.hoeffding_epsilon, s.delta);
            if let Some(w) = &s.warning {
                let _ = writeln!(out, "warning      {w}");
            }
        }
        let _ = writeln!(out, "seconds      {:.3}", self.seconds);
        out
    }
}
