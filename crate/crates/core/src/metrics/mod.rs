//! Base comparison measures between hard clusterings, the evidential Rand
//! baseline, and metric-axiom checking.

pub mod assignment;
mod axioms;
mod contingency;
mod evidential;
mod hard;

pub use axioms::{
    all_partitions, check_axioms, check_axioms_restricted, hausdorff, Axiom, AxiomReport, Counterexample,
};
pub use contingency::Contingency;
pub use evidential::{mass_metric, rand_evidential, MassMetric};
pub use hard::{
    entropy, mutual_information, mutual_information_base, partition_distance, rand_index, rand_index_with,
    BaseDistance, HardDistance, RandNormalization,
};
