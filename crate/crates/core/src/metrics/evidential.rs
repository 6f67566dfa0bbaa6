use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{pair_relation_mass, PairRelationMass, SoftClustering};

/// Normalized metric between mass functions on the pair frame `{s, not s}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MassMetric {
    /// Half the L1 distance between the three mass components.
    HalfL1,
    /// Jousselme distance with Jaccard similarity between focal sets.
    #[default]
    Jousselme,
}

impl FromStr for MassMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l1" | "half-l1" => Ok(MassMetric::HalfL1),
            "jousselme" => Ok(MassMetric::Jousselme),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

impl fmt::Display for MassMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MassMetric::HalfL1 => "l1",
            MassMetric::Jousselme => "jousselme",
        })
    }
}

// Jaccard indices between {s}, {not s} and the whole pair frame.
const JACCARD: [[f64; 3]; 3] = [[1.0, 0.0, 0.5], [0.0, 1.0, 0.5], [0.5, 0.5, 1.0]];

pub fn mass_metric(m1: &PairRelationMass, m2: &PairRelationMass, kind: MassMetric) -> f64 {
    let (a, b) = (m1.as_array(), m2.as_array());
    let diff = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    match kind {
        MassMetric::HalfL1 => 0.5 * diff.iter().map(|d| d.abs()).sum::<f64>(),
        MassMetric::Jousselme => {
            let mut q = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    q += diff[i] * JACCARD[i][j] * diff[j];
                }
            }
            (0.5 * q).max(0.0).sqrt()
        }
    }
}

/// Evidential Rand index: mean over unordered pairs of one minus the
/// distance between the two pairwise relation masses.
pub fn rand_evidential(m1: &SoftClustering, m2: &SoftClustering, kind: MassMetric) -> Result<f64> {
    if m1.n() != m2.n() {
        return Err(Error::MismatchedObjectCount {
            left: m1.n(),
            right: m2.n(),
        });
    }
    let n = m1.n();
    if n < 2 {
        return Err(Error::TooFewObjects { needed: 2, got: n });
    }
    let mut total = 0.0;
    for x in 0..n {
        for y in x + 1..n {
            let p1 = pair_relation_mass(m1, x, y)?;
            let p2 = pair_relation_mass(m2, x, y)?;
            total += 1.0 - mass_metric(&p1, &p2, kind);
        }
    }
    Ok(total * 2.0 / (n * (n - 1)) as f64)
}
