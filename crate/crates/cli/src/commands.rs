use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use distclust::clusterers::{
    evidential_cmeans, fuzzy_cmeans, kmeans, possibilistic_cmeans, rough_kmeans, Dataset, Fit, FitConfig,
};
use distclust::distributional::{BoundsMethod, TNorm, DEFAULT_BUDGET};
use distclust::io::{clustering_to_json, iris, load_dataset, parse_clustering, write_clustering, DatasetOptions, EvalMode};
use distclust::metrics::{BaseDistance, MassMetric};
use distclust::model::{classify, EmptySetPolicy, SoftClustering};
use distclust::pipeline::{
    compare, reproduce_iris, run_axioms, run_bench, Algorithm, AxiomFamily, AxiomOptions, BenchOptions,
    CompareOptions, Input, IrisOptions, View, IRIS_BUDGET,
};
use distclust::sampling::SampleMode;

use crate::args::{AxiomArgs, BenchArgs, Cli, ClusterArgs, Command, CompareArgs, IrisArgs, Output};
use crate::Failure;

type Outcome = Result<String, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Compare(a) => cmd_compare(cli, a),
        Command::Cluster(a) => cmd_cluster(cli, a),
        Command::ReproduceIris(a) => cmd_iris(cli, a),
        Command::Axioms(a) => cmd_axioms(cli, a),
        Command::Bench(a) => cmd_bench(cli, a),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("outputs serialize")
}

fn parse<T: std::str::FromStr<Err = distclust::Error>>(s: &str) -> Result<T, Failure> {
    s.parse::<T>().map_err(Failure::from)
}

fn parse_mode(s: &str) -> Result<EvalMode, Failure> {
    match s {
        "exact" => Ok(EvalMode::Exact),
        "sample" | "sampled" => Ok(EvalMode::Sampled),
        other => Err(Failure::usage(format!("unknown mode {other:?}; expected exact or sample"))),
    }
}

fn parse_sample_mode(s: &str) -> Result<SampleMode, Failure> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| Failure::usage(format!("unknown sample mode {s:?}")))
}

fn read_input(path: &Path, policy: EmptySetPolicy) -> Result<Input, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::from(distclust::Error::from(e)))?;
    let text = String::from_utf8_lossy(&bytes);
    let clustering = parse_clustering(&text, policy)?;
    Ok(Input::from_file(clustering, &path.display().to_string(), &bytes))
}

fn label_input(path: &Path, col: &str) -> Result<Input, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::from(distclust::Error::from(e)))?;
    let data = distclust::io::parse_dataset(bytes.as_slice(), &DatasetOptions::with_labels(col))?;
    let labels = data.labels().expect("label column requested").to_soft();
    Ok(Input::from_file(labels, &format!("{}#{col}", path.display()), &bytes))
}

fn cmd_compare(cli: &Cli, a: &CompareArgs) -> Outcome {
    let policy: EmptySetPolicy = parse(&a.empty_set)?;
    let left = read_input(&a.left, policy)?;
    let right = match (&a.right, &a.labels, &a.label_col) {
        (Some(p), _, _) => read_input(p, policy)?,
        (None, Some(p), Some(col)) => label_input(p, col)?,
        _ => return Err(Failure::usage("compare needs a second clustering file or --labels with --label-col")),
    };
    let opts = CompareOptions {
        base: parse::<BaseDistance>(&a.measure)?,
        mode: parse_mode(&a.mode)?,
        view: parse::<View>(&a.view)?,
        samples: a.samples,
        epsilon: a.epsilon,
        delta: a.delta,
        sample_mode: a.sample_mode.as_deref().map(parse_sample_mode).transpose()?,
        inner_samples: a.inner_samples,
        seed: cli.seed,
        budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
        bounds: parse::<BoundsMethod>(&a.bounds)?,
        tnorm: parse::<TNorm>(&a.tnorm)?,
        mass_metric: parse::<MassMetric>(&a.d_m)?,
        full_distribution: a.full_distribution,
    };
    let report = compare(&left, &right, &opts)?;
    Ok(match cli.output {
        Output::Json => report.to_json(),
        Output::Table => report.render_table(),
    })
}

#[derive(Serialize)]
struct FitSummary {
    algorithm: String,
    kind: String,
    n: usize,
    k: usize,
    iterations: usize,
    converged: bool,
    objective: Option<f64>,
    out: String,
}

fn finish<T>(
    fit: Fit<T>,
    algorithm: Algorithm,
    out: &Path,
    to_soft: impl Fn(&T) -> SoftClustering,
) -> (SoftClustering, FitSummary) {
    let clustering = to_soft(&fit.clustering);
    let summary = FitSummary {
        algorithm: algorithm.name().to_string(),
        kind: classify(&clustering).to_string(),
        n: clustering.n(),
        k: clustering.k(),
        iterations: fit.iterations,
        converged: fit.converged,
        objective: fit.objective_trace.last().copied(),
        out: out.display().to_string(),
    };
    (clustering, summary)
}

fn cmd_cluster(cli: &Cli, a: &ClusterArgs) -> Outcome {
    let algorithm: Algorithm = parse(&a.algorithm)?;
    let data: Dataset = match &a.data {
        Some(path) => load_dataset(
            path,
            &DatasetOptions {
                label_col: a.label_col.clone(),
            },
        )?,
        None => iris(),
    };
    let mut cfg = FitConfig::new(a.k, cli.seed);
    cfg.fuzzifier = a.m;
    cfg.epsilon = a.rkm_epsilon;
    cfg.lower_weight = a.lower_weight;
    cfg.upper_weight = a.upper_weight;
    cfg.alpha = a.alpha;
    cfg.beta = a.beta;
    cfg.delta = a.delta;
    cfg.singletons_only = a.singletons_only;
    cfg.restarts = a.restarts;
    cfg.max_iters = a.max_iters;
    let out = a.out.as_deref().unwrap_or(Path::new("-"));
    let (clustering, summary) = match algorithm {
        Algorithm::Km => finish(kmeans(&data, &cfg)?, algorithm, out, |c| c.to_soft()),
        Algorithm::Rkm => finish(rough_kmeans(&data, &cfg)?, algorithm, out, |c| c.to_soft()),
        Algorithm::Fcm => finish(fuzzy_cmeans(&data, &cfg)?, algorithm, out, Clone::clone),
        Algorithm::Pcm => finish(possibilistic_cmeans(&data, &cfg)?, algorithm, out, Clone::clone),
        Algorithm::Ecm => finish(evidential_cmeans(&data, &cfg)?, algorithm, out, Clone::clone),
    };
    let Some(path) = &a.out else {
        return Ok(clustering_to_json(&clustering));
    };
    write_clustering(&clustering, path)?;
    Ok(match cli.output {
        Output::Json => json(&summary),
        Output::Table => {
            let mut t = String::new();
            let _ = writeln!(t, "algorithm    {}", summary.algorithm);
            let _ = writeln!(t, "kind         {}", summary.kind);
            let _ = writeln!(t, "objects      {}", summary.n);
            let _ = writeln!(t, "clusters     {}", summary.k);
            let _ = writeln!(t, "iterations   {} (converged: {})", summary.iterations, summary.converged);
            if let Some(obj) = summary.objective {
                let _ = writeln!(t, "objective    {obj:.6}");
            }
            let _ = writeln!(t, "written to   {}", summary.out);
            t
        }
    })
}

fn cmd_iris(cli: &Cli, a: &IrisArgs) -> Outcome {
    let algorithms = if a.algorithms.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        a.algorithms.iter().map(|s| parse::<Algorithm>(s)).collect::<Result<_, _>>()?
    };
    let bounds: BoundsMethod = parse(&a.bounds)?;
    let seeds = if a.seeds.is_empty() { vec![cli.seed] } else { a.seeds.clone() };
    let mut tables = Vec::new();
    for seed in seeds {
        let opts = IrisOptions {
            seed,
            restarts: a.restarts,
            samples: a.samples,
            inner_samples: a.inner_samples,
            budget: cli.budget.unwrap_or(IRIS_BUDGET),
            bounds,
            algorithms: algorithms.clone(),
            ..IrisOptions::default()
        };
        tables.push(reproduce_iris(&opts)?);
    }
    Ok(match cli.output {
        Output::Json if tables.len() == 1 => json(&tables[0]),
        Output::Json => json(&tables),
        Output::Table => tables.iter().map(|t| t.render()).collect::<Vec<_>>().join("\n"),
    })
}

fn cmd_axioms(cli: &Cli, a: &AxiomArgs) -> Outcome {
    let family: AxiomFamily = parse(&a.family)?;
    let opts = AxiomOptions {
        base: parse(&a.measure)?,
        family,
        n: a.n,
        k: a.k.unwrap_or(if family == AxiomFamily::Hard { a.n } else { 2 }),
        exhaustive: a.exhaustive,
        count: a.count,
        seed: cli.seed,
    };
    let outcome = run_axioms(&opts)?;
    Ok(match cli.output {
        Output::Json => json(&outcome),
        Output::Table => outcome.render(),
    })
}

fn cmd_bench(cli: &Cli, a: &BenchArgs) -> Outcome {
    let opts = BenchOptions {
        seed: cli.seed,
        samples: a.samples,
        fuzzy_sizes: a.fuzzy_sizes.clone(),
        ambiguous_objects: a.ambiguous.clone(),
    };
    let records = run_bench(&opts)?;
    Ok(match cli.output {
        Output::Json => json(&records),
        Output::Table => {
            let mut t = format!("{:<26} {:>8} {:>12} {:>10}\n", "workload", "size", "value", "seconds");
            for r in &records {
                let _ = writeln!(t, "{:<26} {:>8} {:>12.6} {:>10.3}", r.workload, r.size, r.value, r.seconds);
            }
            t
        }
    })
}
