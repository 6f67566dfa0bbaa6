//! Monte-Carlo estimates of the distributional measures, with Hoeffding
//! sample sizes and reproducible seeded streams.

mod draw;
mod estimators;
mod plan;

pub use draw::{draw_hard, draw_rc, ConsonantSampler, ProductSampler, RcSampler};
pub use estimators::{
    approx_expectation_fuzzy, approx_expectations_evidential, approx_expectations_possibilistic,
    approx_expectations_with, approx_interval_rough, stream_rng, SAMPLE_CHUNK,
};
pub use plan::{
    hoeffding_half_width, required_samples, ApproxResult, SampleMode, SamplePlan, DEFAULT_INNER_SAMPLES,
};

#[cfg(test)]
mod tests;
