//! File formats and report serialization.

mod clustering_file;
mod dataset;
mod report;

pub use clustering_file::{
    clustering_to_json, parse_clustering, read_clustering, read_clustering_with, write_clustering, ClusteringFile,
    FocalEntry, ObjectEntry, SCHEMA_VERSION,
};
pub use dataset::{iris, load_dataset, parse_dataset, DatasetOptions};
pub use report::{
    fmt_range, round_seconds, sha256_hex, DistributionEntry, EnumerationCounts, EvalMode, EvaluationReport,
    InputInfo, Parameters, ReportResult, SamplingInfo,
};
