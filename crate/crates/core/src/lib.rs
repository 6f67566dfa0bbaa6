//! Distributional comparison of soft clusterings.
//!
//! A rough, fuzzy, possibilistic or evidential clustering is read as a
//! distribution over hard clusterings. Any distance between hard
//! clusterings then lifts to a set, distribution, or mass function of
//! distance values between two soft clusterings, summarized by intervals
//! and lower/upper expectations. Exact enumeration is guarded by a budget;
//! Monte-Carlo estimators with Hoeffding half-widths cover larger inputs.

pub mod clusterers;
pub mod distributional;
pub mod error;
pub mod io;
pub mod metrics;
pub mod model;
pub mod pipeline;
pub mod sampling;

pub use error::{Error, Result};

/// Tolerance for internal equality of masses and distance values.
pub const TOLERANCE: f64 = 1e-9;

/// Largest deviation from one accepted (and rescaled away) in input mass sums.
pub const INPUT_TOLERANCE: f64 = 1e-6;
