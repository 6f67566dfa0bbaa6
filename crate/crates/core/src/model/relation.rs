use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{HardClustering, SoftClustering};

/// The co-membership relation of a hard clustering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalRepr {
    n: usize,
    same: Vec<bool>,
}

impl RelationalRepr {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn same_cluster(&self, x: usize, y: usize) -> bool {
        self.same[x * self.n + y]
    }

    pub fn is_equivalence(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| self.same_cluster(x, x))
            && (0..n).all(|x| (0..n).all(|y| self.same_cluster(x, y) == self.same_cluster(y, x)))
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    !self.same_cluster(x, y)
                        || (0..n).all(|z| !self.same_cluster(y, z) || self.same_cluster(x, z))
                })
            })
    }
}

pub fn relational_of_hard(c: &HardClustering) -> RelationalRepr {
    let n = c.n();
    let a = c.assignment();
    let mut same = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            same.push(a[x] == a[y]);
        }
    }
    RelationalRepr { n, same }
}

/// Whether two hard clusterings induce the same partition.
///
/// Compares first-occurrence canonical forms, which coincide exactly when
/// the relational representations do.
pub fn equivalent(c1: &HardClustering, c2: &HardClustering) -> bool {
    c1.n() == c2.n() && c1.canonical() == c2.canonical()
}

/// Mass on "same cluster", "different cluster" and "don't know" for a pair
/// of objects.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairRelationMass {
    pub same: f64,
    pub not_same: f64,
    pub theta: f64,
}

impl PairRelationMass {
    pub const SAME: PairRelationMass = PairRelationMass {
        same: 1.0,
        not_same: 0.0,
        theta: 0.0,
    };
    pub const NOT_SAME: PairRelationMass = PairRelationMass {
        same: 0.0,
        not_same: 1.0,
        theta: 0.0,
    };

    pub fn as_array(&self) -> [f64; 3] {
        [self.same, self.not_same, self.theta]
    }
}

/// Combine the masses of objects `x` and `y` (unnormalized conjunctive
/// combination) and restrict the result to the pair frame.
///
/// Products of equal singletons support `same`, products of disjoint sets
/// support `not_same`, everything else is left on the whole pair frame.
pub fn pair_relation_mass(m: &SoftClustering, x: usize, y: usize) -> Result<PairRelationMass> {
    let n = m.n();
    for i in [x, y] {
        if i >= n {
            return Err(Error::ObjectOutOfRange { index: i, n });
        }
    }
    if x == y {
        return Err(Error::InvalidConfig(
            "pair relation needs two distinct objects".into(),
        ));
    }
    let (mut same, mut not_same) = (0.0, 0.0);
    for &(a, ma) in m.mass_of(x).focal() {
        for &(b, mb) in m.mass_of(y).focal() {
            if a.is_disjoint(b) {
                not_same += ma * mb;
            } else if a == b && a.is_singleton() {
                same += ma * mb;
            }
        }
    }
    Ok(PairRelationMass {
        same,
        not_same,
        theta: (1.0 - same - not_same).max(0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{EmptySetPolicy, FocalSet, Frame, MassFunction};

    fn c_hard() -> HardClustering {
        HardClustering::from_indices(&[0, 0, 1]).unwrap()
    }

    fn fixture_e() -> SoftClustering {
        let a = MassFunction::new(
            &[(FocalSet::singleton(0), 0.6), (FocalSet::full(2), 0.4)],
            2,
            EmptySetPolicy::Reject,
        )
        .unwrap();
        SoftClustering::new(
            Frame::with_size(2).unwrap(),
            vec![
                a,
                MassFunction::categorical(FocalSet::singleton(0)),
                MassFunction::categorical(FocalSet::singleton(1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn relation_of_hard_fixture() {
        let r = relational_of_hard(&c_hard());
        assert!(r.same_cluster(0, 1));
        assert!(!r.same_cluster(0, 2));
        assert!(!r.same_cluster(1, 2));
        assert!(r.is_equivalence());
        let swapped = c_hard().relabeled(&[1, 0]).unwrap();
        assert_eq!(relational_of_hard(&swapped), r);
        let one = HardClustering::from_indices(&[0, 0, 0]).unwrap();
        let all = relational_of_hard(&one);
        assert!((0..3).all(|x| (0..3).all(|y| all.same_cluster(x, y))));
    }

    #[test]
    fn equivalence_of_hard_clusterings() {
        let c = c_hard();
        assert!(equivalent(&c, &c));
        assert!(equivalent(&c, &c.relabeled(&[1, 0]).unwrap()));
        let other = HardClustering::from_indices(&[0, 1, 1]).unwrap();
        assert!(!equivalent(&c, &other));
    }

    #[test]
    fn pair_masses_of_fixture_e() {
        let m = fixture_e();
        let ab = pair_relation_mass(&m, 0, 1).unwrap();
        assert!((ab.same - 0.6).abs() < 1e-12 && ab.not_same.abs() < 1e-12);
        assert!((ab.theta - 0.4).abs() < 1e-12);
        let ac = pair_relation_mass(&m, 0, 2).unwrap();
        assert!(ac.same.abs() < 1e-12 && (ac.not_same - 0.6).abs() < 1e-12);
        assert!((ac.theta - 0.4).abs() < 1e-12);
        let h = c_hard().to_soft();
        assert_eq!(pair_relation_mass(&h, 0, 1).unwrap(), PairRelationMass::SAME);
        assert!(pair_relation_mass(&h, 1, 1).is_err());
    }
}
