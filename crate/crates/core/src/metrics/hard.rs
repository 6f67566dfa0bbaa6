use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::Contingency;
use crate::model::HardClustering;

/// How Rand-index agreements are counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RandNormalization {
    /// Unordered pairs of distinct objects, `n(n-1)/2` of them.
    #[default]
    UnorderedPairs,
    /// Ordered pairs including the diagonal, `n^2` of them. The diagonal
    /// always agrees, so the distance never reaches 1.
    OrderedWithDiagonal,
}

/// A distance between hard clusterings that depends only on their
/// contingency table.
pub trait HardDistance: Send + Sync {
    fn name(&self) -> String;

    fn from_table(&self, table: &Contingency) -> f64;

    /// Whether the maximum attainable value is 1.
    fn is_normalized(&self) -> bool {
        true
    }

    /// `Some` when this is `1 - Rand` under the given normalization, which
    /// enables exact bounds without enumeration.
    fn rand_normalization(&self) -> Option<RandNormalization> {
        None
    }

    fn distance(&self, a: &HardClustering, b: &HardClustering) -> Result<f64> {
        check_pair(a, b)?;
        Ok(self.from_table(&Contingency::new(a, b)?))
    }
}

/// The two shipped base distances: `1 - Rand` and the partition distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseDistance {
    Rand(RandNormalization),
    Partition,
}

impl BaseDistance {
    pub const RAND: BaseDistance = BaseDistance::Rand(RandNormalization::UnorderedPairs);
}

impl HardDistance for BaseDistance {
    fn name(&self) -> String {
        self.to_string()
    }

    fn from_table(&self, t: &Contingency) -> f64 {
        let n = t.n() as f64;
        match self {
            BaseDistance::Rand(RandNormalization::UnorderedPairs) => {
                t.disagreeing_pairs() as f64 / t.total_pairs() as f64
            }
            BaseDistance::Rand(RandNormalization::OrderedWithDiagonal) => {
                2.0 * t.disagreeing_pairs() as f64 / (n * n)
            }
            BaseDistance::Partition => t.min_moves() as f64 / (n - 1.0),
        }
    }

    fn is_normalized(&self) -> bool {
        !matches!(self, BaseDistance::Rand(RandNormalization::OrderedWithDiagonal))
    }

    fn rand_normalization(&self) -> Option<RandNormalization> {
        match self {
            BaseDistance::Rand(norm) => Some(*norm),
            BaseDistance::Partition => None,
        }
    }
}

impl fmt::Display for BaseDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseDistance::Rand(RandNormalization::UnorderedPairs) => "rand",
            BaseDistance::Rand(RandNormalization::OrderedWithDiagonal) => "rand-squared",
            BaseDistance::Partition => "partition",
        })
    }
}

impl FromStr for BaseDistance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rand" => Ok(BaseDistance::RAND),
            "rand-squared" => Ok(BaseDistance::Rand(RandNormalization::OrderedWithDiagonal)),
            "partition" => Ok(BaseDistance::Partition),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

pub(crate) fn check_pair(a: &HardClustering, b: &HardClustering) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::MismatchedObjectCount {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.n() < 2 {
        return Err(Error::TooFewObjects { needed: 2, got: a.n() });
    }
    Ok(())
}

/// Fraction of unordered object pairs on which the two clusterings agree.
pub fn rand_index(c1: &HardClustering, c2: &HardClustering) -> Result<f64> {
    rand_index_with(c1, c2, RandNormalization::UnorderedPairs)
}

pub fn rand_index_with(c1: &HardClustering, c2: &HardClustering, norm: RandNormalization) -> Result<f64> {
    Ok(1.0 - BaseDistance::Rand(norm).distance(c1, c2)?)
}

/// Minimum number of object moves between the clusterings, over `n - 1`.
pub fn partition_distance(c1: &HardClustering, c2: &HardClustering) -> Result<f64> {
    BaseDistance::Partition.distance(c1, c2)
}

fn plogp_terms(t: &Contingency) -> (f64, Vec<f64>, Vec<f64>) {
    let n = t.n() as f64;
    let p1 = t.row_sums().iter().map(|&c| c as f64 / n).collect();
    let p2 = t.col_sums().iter().map(|&c| c as f64 / n).collect();
    (n, p1, p2)
}

/// Mutual information in nats.
pub fn mutual_information(c1: &HardClustering, c2: &HardClustering) -> Result<f64> {
    mutual_information_base(c1, c2, std::f64::consts::E)
}

/// Mutual information with logarithms in the given base.
pub fn mutual_information_base(c1: &HardClustering, c2: &HardClustering, base: f64) -> Result<f64> {
    if c1.n() != c2.n() {
        return Err(Error::MismatchedObjectCount {
            left: c1.n(),
            right: c2.n(),
        });
    }
    if !(base > 0.0 && base != 1.0) {
        return Err(Error::OutOfRange { name: "log base", value: base });
    }
    let t = Contingency::new(c1, c2)?;
    let (n, p1, p2) = plogp_terms(&t);
    let mut mi = 0.0;
    for (i, pi) in p1.iter().enumerate() {
        for (j, pj) in p2.iter().enumerate() {
            let pij = t.cell(i, j) as f64 / n;
            if pij > 0.0 {
                mi += pij * (pij / (pi * pj)).ln();
            }
        }
    }
    Ok((mi / base.ln()).max(0.0))
}

/// Shannon entropy (nats) of the cluster-size distribution.
pub fn entropy(c: &HardClustering) -> f64 {
    let n = c.n() as f64;
    c.cluster_sizes()
        .iter()
        .filter(|&&s| s > 0)
        .map(|&s| {
            let p = s as f64 / n;
            -p * p.ln()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hc(a: &[usize]) -> HardClustering {
        HardClustering::from_indices(a).unwrap()
    }

    #[test]
    fn rand_index_examples() {
        let c = hc(&[0, 0, 1, 2]);
        assert_eq!(rand_index(&c, &c.relabeled(&[2, 0, 1]).unwrap()).unwrap(), 1.0);
        // (a,b|c) vs (a|b,c): only the pair (a,c) agrees.
        let r = rand_index(&hc(&[0, 0, 1]), &hc(&[0, 1, 1])).unwrap();
        assert!((r - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(rand_index(&hc(&[0, 0]), &hc(&[0, 1])).unwrap(), 0.0);
        assert!(matches!(
            rand_index(&hc(&[0, 0]), &hc(&[0, 1, 1])),
            Err(Error::MismatchedObjectCount { .. })
        ));
        assert!(matches!(rand_index(&hc(&[0]), &hc(&[0])), Err(Error::TooFewObjects { .. })));
    }

    #[test]
    fn squared_normalization_counts_diagonal() {
        // n = 3, one agreeing unordered pair out of three: 9 - 2*2 = 5 of 9.
        let r = rand_index_with(&hc(&[0, 0, 1]), &hc(&[0, 1, 1]), RandNormalization::OrderedWithDiagonal).unwrap();
        assert!((r - 5.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn partition_distance_examples() {
        let c = hc(&[0, 1, 1, 2]);
        assert_eq!(partition_distance(&c, &c).unwrap(), 0.0);
        assert!((partition_distance(&hc(&[0, 0, 1]), &hc(&[0, 1, 1])).unwrap() - 0.5).abs() < 1e-12);
        assert!((partition_distance(&hc(&[0, 0, 0]), &hc(&[0, 1, 2])).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_examples() {
        let c = hc(&[0, 0, 1, 1]);
        assert!((mutual_information(&c, &c).unwrap() - 2f64.ln()).abs() < 1e-12);
        assert!(mutual_information(&c, &hc(&[0, 1, 0, 1])).unwrap().abs() < 1e-12);
        assert!(mutual_information(&hc(&[0, 0, 0, 0]), &c).unwrap().abs() < 1e-12);
        assert!((mutual_information_base(&c, &c, 2.0).unwrap() - 1.0).abs() < 1e-12);
    }

    fn labels(n: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0usize..4, n)
    }

    proptest! {
        #[test]
        fn relabel_invariance(a in labels(7), b in labels(7), perm in Just(vec![2usize, 3, 0, 1])) {
            let (ca, cb) = (HardClustering::new(crate::model::Frame::with_size(4).unwrap(), a).unwrap(),
                            HardClustering::new(crate::model::Frame::with_size(4).unwrap(), b).unwrap());
            let ra = ca.relabeled(&perm).unwrap();
            prop_assert!((rand_index(&ca, &cb).unwrap() - rand_index(&ra, &cb).unwrap()).abs() < 1e-12);
            prop_assert!((partition_distance(&ca, &cb).unwrap() - partition_distance(&ra, &cb).unwrap()).abs() < 1e-12);
            let moves = partition_distance(&ca, &cb).unwrap() * 6.0;
            prop_assert!((moves - moves.round()).abs() < 1e-9);
        }

        #[test]
        fn mi_bounded_by_entropies(a in labels(9), b in labels(9)) {
            let (ca, cb) = (HardClustering::from_indices(&a).unwrap(), HardClustering::from_indices(&b).unwrap());
            let mi = mutual_information(&ca, &cb).unwrap();
            prop_assert!(mi >= 0.0);
            prop_assert!(mi <= entropy(&ca).min(entropy(&cb)) + 1e-12);
        }
    }
}
