use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const CONVENTION: &str = "\
Distances are computed throughout; similarities are shown as 1 - distance. \
For an interval or a pair of expectations the endpoints are converted and \
swapped, so a distance interval (a, b) is reported as similarity (1 - b, 1 - a).";

#[derive(Parser, Debug)]
#[command(
    name = "distclust",
    version,
    about = "Compare rough, fuzzy, possibilistic and evidential clusterings",
    after_help = CONVENTION
)]
pub struct Cli {
    /// Seed for every random choice (sampling, clusterer initialization).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Work budget for exact computations (compatible pairs enumerated, or
    /// contingency-table transitions). Command-specific default when absent.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    pub output: Output,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compare two clusterings, or one clustering with dataset labels.
    #[command(after_help = CONVENTION)]
    Compare(CompareArgs),
    /// Fit a c-means family clusterer and write a clustering file.
    Cluster(ClusterArgs),
    /// Run all clusterers on the bundled Iris data and tabulate the measures.
    #[command(after_help = CONVENTION)]
    ReproduceIris(IrisArgs),
    /// Check metric axioms of a measure over generated clusterings.
    Axioms(AxiomArgs),
    /// Time the main computations on synthetic and Iris workloads.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// First clustering file.
    pub left: PathBuf,
    /// Second clustering file; omit when using --labels.
    pub right: Option<PathBuf>,
    /// CSV whose label column is the second (hard) clustering.
    #[arg(long, conflicts_with = "right", requires = "label_col")]
    pub labels: Option<PathBuf>,
    #[arg(long)]
    pub label_col: Option<String>,
    /// Base distance: rand, rand-squared or partition.
    #[arg(long, default_value = "rand")]
    pub measure: String,
    /// exact or sample.
    #[arg(long, default_value = "exact")]
    pub mode: String,
    /// auto, rough, fuzzy, possibilistic, evidential, joint or relational.
    #[arg(long, default_value = "auto")]
    pub view: String,
    #[arg(long)]
    pub samples: Option<u64>,
    /// Target Hoeffding half-width; sets the sample count when --samples is absent.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, default_value_t = 0.05)]
    pub delta: f64,
    /// rough-interval, fuzzy-expectation, evidential-exact-inner or evidential-nested.
    #[arg(long)]
    pub sample_mode: Option<String>,
    #[arg(long, default_value_t = distclust::sampling::DEFAULT_INNER_SAMPLES)]
    pub inner_samples: usize,
    /// min or product.
    #[arg(long, default_value = "min")]
    pub tnorm: String,
    /// Mass distance of the relational view: l1 or jousselme.
    #[arg(long = "d-m", default_value = "jousselme")]
    pub d_m: String,
    /// Handling of mass on the empty set: reject, redistribute-omega or renormalize.
    #[arg(long, default_value = "redistribute-omega")]
    pub empty_set: String,
    /// Exact interval bounds: enumerate every compatible pair, or use the
    /// contingency-table program where one side is hard under a Rand distance.
    #[arg(long, default_value = "enumerate")]
    pub bounds: String,
    /// Include the full value distribution in exact evidential results.
    #[arg(long)]
    pub full_distribution: bool,
}

#[derive(Args, Debug)]
pub struct ClusterArgs {
    /// Headed CSV of numeric features; the bundled Iris data when absent.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Label column to exclude from the features.
    #[arg(long)]
    pub label_col: Option<String>,
    /// km, rkm, fcm, pcm or ecm.
    #[arg(long)]
    pub algorithm: String,
    #[arg(short, long, default_value_t = 3)]
    pub k: usize,
    /// Fuzzifier of FCM and PCM.
    #[arg(long, default_value_t = 2.0)]
    pub m: f64,
    /// Distance-ratio threshold of RKM.
    #[arg(long, default_value_t = 1.1)]
    pub rkm_epsilon: f64,
    #[arg(long, default_value_t = 0.7)]
    pub lower_weight: f64,
    #[arg(long, default_value_t = 0.3)]
    pub upper_weight: f64,
    /// ECM cardinality penalty.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// ECM fuzzifier.
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    /// ECM outlier distance.
    #[arg(long, default_value_t = 10.0)]
    pub delta: f64,
    /// Restrict ECM focal sets to singletons.
    #[arg(long)]
    pub singletons_only: bool,
    #[arg(long, default_value_t = 1)]
    pub restarts: usize,
    #[arg(long, default_value_t = 300)]
    pub max_iters: usize,
    /// Clustering file to write; printed to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct IrisArgs {
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    #[arg(long, default_value_t = distclust::sampling::DEFAULT_INNER_SAMPLES)]
    pub inner_samples: usize,
    #[arg(long, default_value_t = 10)]
    pub restarts: usize,
    /// Comma-separated subset of KM,RKM,FCM,PCM,ECM.
    #[arg(long, value_delimiter = ',')]
    pub algorithms: Vec<String>,
    /// Exact interval bounds: contingency or enumerate.
    #[arg(long, default_value = "contingency")]
    pub bounds: String,
    /// Run once per listed seed instead of the global --seed.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<u64>,
}

#[derive(Args, Debug)]
pub struct AxiomArgs {
    /// rand, rand-squared or partition.
    #[arg(long, default_value = "partition")]
    pub measure: String,
    /// hard, upper, upper-vs-hard or lower.
    #[arg(long, default_value = "hard")]
    pub family: String,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Clusters; defaults to n for the hard family (every partition) and 2 otherwise.
    #[arg(long)]
    pub k: Option<usize>,
    /// Check every clustering of the family instead of a random draw.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    /// Object counts for the closed-form fuzzy Rand workload.
    #[arg(long, value_delimiter = ',', default_values_t = [250, 500, 1000])]
    pub fuzzy_sizes: Vec<usize>,
    /// Ambiguous-object counts for the exact rough interval workload.
    #[arg(long, value_delimiter = ',', default_values_t = [4, 8, 12])]
    pub ambiguous: Vec<usize>,
}
