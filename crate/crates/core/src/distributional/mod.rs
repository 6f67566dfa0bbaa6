//! Soft clusterings as distributions over hard clusterings, and the exact
//! distributional measures built on that view.

mod compat;
mod counting;
mod enumerate;
mod fast;
mod measures;
mod rough;
mod values;

pub use compat::{compatible_classes, total_compatibility};
pub use enumerate::{compatible_hcs, CompatibleHcs};
pub use fast::fuzzy_rand_expectation_fast;
pub use measures::{
    distribution_over_rcs, distributional_evidential, distributional_evidential_rcs, distributional_fuzzy,
    distributional_possibilistic, distributional_rough, evidential_expectations, evidential_expectations_with,
    focal_rc_count, possibilistic_rc_distribution, rough_interval, rough_interval_with, BoundsMethod,
    RcDistribution, TNorm, DEFAULT_BUDGET,
};
pub(crate) use measures::{bounds_cost, uses_contingency};
pub use rough::RoughClustering;
pub use values::{
    expectation_summary, interval_summary, DistributionKind, ExpectationSummary, IntervalSummary,
    ValueDistribution, ValueSet, ValueSetMass,
};

use crate::error::Error;

/// Sample count suggested when an exact computation is refused.
pub const SUGGESTED_EPSILON: f64 = 0.02;
pub const SUGGESTED_DELTA: f64 = 0.05;

pub(crate) fn budget_error(required: u128, budget: u64) -> Error {
    Error::BudgetExceeded {
        required,
        budget,
        suggested_samples: crate::sampling::required_samples(SUGGESTED_EPSILON, SUGGESTED_DELTA)
            .expect("constants are in range"),
    }
}
