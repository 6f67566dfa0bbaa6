use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::distributional::{BoundsMethod, DEFAULT_BUDGET, SUGGESTED_DELTA, SUGGESTED_EPSILON};
use crate::error::{Error, Result};

/// Smallest `s` with `2 exp(-2 s eps^2) <= delta`.
pub fn required_samples(epsilon: f64, delta: f64) -> Result<u64> {
    check_unit("epsilon", epsilon)?;
    check_unit("delta", delta)?;
    let s = ((2.0 / delta).ln() / (2.0 * epsilon * epsilon)).ceil();
    Ok((s as u64).max(1))
}

/// Half-width `eps` solving `2 exp(-2 s eps^2) = delta`.
pub fn hoeffding_half_width(samples: u64, delta: f64) -> f64 {
    ((2.0 / delta).ln() / (2.0 * samples.max(1) as f64)).sqrt()
}

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleMode {
    /// Min and max of the distance over sampled compatible pairs.
    RoughInterval,
    /// Mean distance over pairs drawn from the fuzzy product laws.
    FuzzyExpectation,
    /// Sample focal RC pairs, compute each pair's interval exactly.
    EvidentialExactInner,
    /// Sample focal RC pairs, estimate each pair's interval from
    /// `inner_samples` compatible pairs.
    EvidentialNested,
}

pub const DEFAULT_INNER_SAMPLES: usize = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub samples: u64,
    pub epsilon: f64,
    pub delta: f64,
    pub mode: SampleMode,
    pub inner_samples: usize,
    pub seed: u64,
    /// Enumeration budget for each exactly computed inner interval.
    pub budget: u64,
    /// How each exactly computed inner interval is bounded.
    #[serde(default)]
    pub bounds: BoundsMethod,
}

impl SamplePlan {
    /// Defaults: `delta = 0.05`, `epsilon = 0.02`, `s` from [`required_samples`].
    pub fn new(mode: SampleMode, seed: u64) -> Self {
        SamplePlan {
            samples: required_samples(SUGGESTED_EPSILON, SUGGESTED_DELTA).expect("constants in range"),
            epsilon: SUGGESTED_EPSILON,
            delta: SUGGESTED_DELTA,
            mode,
            inner_samples: DEFAULT_INNER_SAMPLES,
            seed,
            budget: DEFAULT_BUDGET,
            bounds: BoundsMethod::Enumerate,
        }
    }

    pub fn with_samples(mut self, samples: u64) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_inner_samples(mut self, inner: usize) -> Self {
        self.inner_samples = inner;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 1 {
            return Err(Error::InvalidConfig("sample count must be at least 1".into()));
        }
        check_unit("epsilon", self.epsilon)?;
        check_unit("delta", self.delta)?;
        if self.mode == SampleMode::EvidentialNested && self.inner_samples < 1 {
            return Err(Error::InvalidConfig("inner sample count must be at least 1".into()));
        }
        Ok(())
    }
}

/// Outcome of a Monte-Carlo estimate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub lower_estimate: f64,
    pub upper_estimate: f64,
    /// Half-width of the two-sided Hoeffding interval at the plan's delta.
    pub hoeffding_epsilon: f64,
    #[serde(with = "secs")]
    pub elapsed: Duration,
    pub samples_used: u64,
    pub warning: Option<String>,
}

impl ApproxResult {
    /// Whether the payload (everything but wall time) matches.
    pub fn same_estimate(&self, other: &ApproxResult) -> bool {
        self.lower_estimate.to_bits() == other.lower_estimate.to_bits()
            && self.upper_estimate.to_bits() == other.upper_estimate.to_bits()
            && self.samples_used == other.samples_used
            && self.hoeffding_epsilon.to_bits() == other.hoeffding_epsilon.to_bits()
    }
}

mod secs {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_sizes() {
        assert_eq!(required_samples(0.05, 0.05).unwrap(), 738);
        assert_eq!(required_samples(0.01, 0.05).unwrap(), 18445);
        assert!(required_samples(0.5, 1.0 - 1e-9).unwrap() >= 1);
        assert!(matches!(required_samples(0.0, 0.05), Err(Error::OutOfRange { name: "epsilon", .. })));
        assert!(matches!(required_samples(0.1, 1.0), Err(Error::OutOfRange { name: "delta", .. })));
    }

    #[test]
    fn half_width_inverts_sample_size() {
        let s = required_samples(0.02, 0.05).unwrap();
        let eps = hoeffding_half_width(s, 0.05);
        assert!(eps <= 0.02 && eps > 0.0199);
        assert!((hoeffding_half_width(10_000, 0.05) - 0.01358).abs() < 1e-4);
    }
}
