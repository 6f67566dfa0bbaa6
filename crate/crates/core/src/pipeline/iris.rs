use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::clusterers::{
    evidential_cmeans, fuzzy_cmeans, kmeans, possibilistic_cmeans, rough_kmeans, Dataset, FitConfig,
};
use crate::distributional::BoundsMethod;
use crate::error::{Error, Result};
use crate::io::{fmt_range, iris, round_seconds, EvalMode, EvaluationReport};
use crate::metrics::BaseDistance;
use crate::model::SoftClustering;
use crate::pipeline::{compare, CompareOptions, Input};
use crate::sampling::DEFAULT_INNER_SAMPLES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "KM")]
    Km,
    #[serde(rename = "RKM")]
    Rkm,
    #[serde(rename = "FCM")]
    Fcm,
    #[serde(rename = "PCM")]
    Pcm,
    #[serde(rename = "ECM")]
    Ecm,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [Algorithm::Km, Algorithm::Rkm, Algorithm::Fcm, Algorithm::Pcm, Algorithm::Ecm];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Km => "KM",
            Algorithm::Rkm => "RKM",
            Algorithm::Fcm => "FCM",
            Algorithm::Pcm => "PCM",
            Algorithm::Ecm => "ECM",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// Work budget of the Iris run: large enough for the exact possibilistic
/// interval through the contingency program, far too small for the evidential
/// product law.
pub const IRIS_BUDGET: u64 = 20_000_000_000;

/// Settings of the Iris experiment. Defaults are the standard
/// hyper-parameters of the experiment with fixed seeding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrisOptions {
    pub seed: u64,
    /// k-means starts; the lowest objective wins.
    pub restarts: usize,
    pub samples: u64,
    pub inner_samples: usize,
    pub budget: u64,
    /// Exact interval bounds; the contingency program by default, without
    /// which no exact possibilistic cell fits any practical budget.
    #[serde(default)]
    pub bounds: BoundsMethod,
    pub fuzzifier: f64,
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
    pub algorithms: Vec<Algorithm>,
}

impl Default for IrisOptions {
    fn default() -> Self {
        IrisOptions {
            seed: 0,
            restarts: 10,
            samples: 10_000,
            inner_samples: DEFAULT_INNER_SAMPLES,
            budget: IRIS_BUDGET,
            bounds: BoundsMethod::Contingency,
            fuzzifier: 5.0,
            epsilon: 1.1,
            alpha: 5.0,
            beta: 5.0,
            delta: 10.0,
            algorithms: Algorithm::ALL.to_vec(),
        }
    }
}

impl IrisOptions {
    pub fn fit_config(&self, algorithm: Algorithm) -> FitConfig {
        let mut cfg = FitConfig::new(3, self.seed);
        cfg.restarts = if algorithm == Algorithm::Km { self.restarts } else { 1 };
        cfg.fuzzifier = self.fuzzifier;
        cfg.epsilon = self.epsilon;
        cfg.alpha = self.alpha;
        cfg.beta = self.beta;
        cfg.delta = self.delta;
        cfg
    }
}

/// Fit one algorithm and return its output as a soft clustering.
pub fn fit(algorithm: Algorithm, data: &Dataset, cfg: &FitConfig) -> Result<SoftClustering> {
    Ok(match algorithm {
        Algorithm::Km => kmeans(data, cfg)?.clustering.to_soft(),
        Algorithm::Rkm => rough_kmeans(data, cfg)?.clustering.to_soft(),
        Algorithm::Fcm => fuzzy_cmeans(data, cfg)?.clustering,
        Algorithm::Pcm => possibilistic_cmeans(data, cfg)?.clustering,
        Algorithm::Ecm => evidential_cmeans(data, cfg)?.clustering,
    })
}

/// Either a report or the error that stopped it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Cell {
    Done { report: Box<EvaluationReport> },
    Failed { code: String, message: String, seconds: f64 },
}

impl Cell {
    fn run(f: impl FnOnce() -> Result<EvaluationReport>) -> Cell {
        let started = Instant::now();
        match f() {
            Ok(report) => Cell::Done {
                report: Box::new(report),
            },
            Err(e) => Cell::Failed {
                code: e.code().to_string(),
                message: e.to_string(),
                seconds: round_seconds(started.elapsed()),
            },
        }
    }

    pub fn report(&self) -> Option<&EvaluationReport> {
        match self {
            Cell::Done { report } => Some(report),
            Cell::Failed { .. } => None,
        }
    }

    /// Similarity range for Rand columns, distance range otherwise.
    fn render(&self, similarity: bool) -> String {
        match self {
            Cell::Done { report } => {
                let range = if similarity {
                    report.result.similarity_range()
                } else {
                    report.result.distance_range()
                };
                format!(
                    "{} ({:.3}s)",
                    range.map(fmt_range).unwrap_or_else(|| "-".into()),
                    report.seconds
                )
            }
            Cell::Failed { code, seconds, .. } => format!("{code} ({seconds:.3}s)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrisRow {
    pub algorithm: Algorithm,
    pub fit_seconds: f64,
    /// Exact Rand-based result.
    pub d_ri: Cell,
    /// Sampled Rand-based result.
    pub s_ri: Cell,
    /// Exact partition-distance result.
    pub d_pd: Cell,
    /// Sampled partition-distance result.
    pub s_pd: Cell,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrisTable {
    pub options: IrisOptions,
    pub rows: Vec<IrisRow>,
}

impl IrisTable {
    pub fn row(&self, algorithm: Algorithm) -> Option<&IrisRow> {
        self.rows.iter().find(|r| r.algorithm == algorithm)
    }

    /// Rand columns as similarities, partition columns as distances.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<5} {:<28} {:<28} {:<28} {:<28}",
            "", "D-RI", "S-RI", "D-PD", "S-PD"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<5} {:<28} {:<28} {:<28} {:<28}",
                r.algorithm.name(),
                r.d_ri.render(true),
                r.s_ri.render(true),
                r.d_pd.render(false),
                r.s_pd.render(false)
            );
        }
        let _ = writeln!(
            out,
            "seed {}, {} samples, {} bounds",
            self.options.seed, self.options.samples, self.options.bounds
        );
        out
    }
}

/// Fit every requested algorithm on the bundled Iris data and compare each
/// output with the species labels, exactly and by sampling, under `1 - Rand`
/// and the partition distance.
pub fn reproduce_iris(opts: &IrisOptions) -> Result<IrisTable> {
    let data = iris();
    let truth = Input::new(data.labels().expect("iris has labels").to_soft());
    let mut rows = Vec::new();
    for &algorithm in &opts.algorithms {
        let started = Instant::now();
        let output = Input::new(fit(algorithm, &data, &opts.fit_config(algorithm))?);
        let fit_seconds = round_seconds(started.elapsed());
        let cell = |base: BaseDistance, mode: EvalMode| {
            let cmp = CompareOptions {
                base,
                mode,
                samples: Some(opts.samples),
                inner_samples: opts.inner_samples,
                seed: opts.seed,
                budget: opts.budget,
                bounds: opts.bounds,
                ..CompareOptions::default()
            };
            Cell::run(|| compare(&output, &truth, &cmp))
        };
        rows.push(IrisRow {
            algorithm,
            fit_seconds,
            d_ri: cell(BaseDistance::RAND, EvalMode::Exact),
            s_ri: cell(BaseDistance::RAND, EvalMode::Sampled),
            d_pd: cell(BaseDistance::Partition, EvalMode::Exact),
            s_pd: cell(BaseDistance::Partition, EvalMode::Sampled),
        });
    }
    Ok(IrisTable {
        options: opts.clone(),
        rows,
    })
}
