use crate::error::{Error, Result};
use crate::model::{is_rough, FocalSet, Frame, HardClustering, SoftClustering};

/// One nonempty region of candidate clusters per object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RoughClustering {
    frame: Frame,
    regions: Vec<FocalSet>,
}

impl RoughClustering {
    pub fn new(frame: Frame, regions: Vec<FocalSet>) -> Result<Self> {
        if regions.is_empty() {
            return Err(Error::NoObjects);
        }
        let full = frame.full_set();
        for (x, r) in regions.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::EmptyFocalSet {
                    object: Some(x),
                    mass: 1.0,
                });
            }
            if !r.is_subset_of(full) {
                return Err(Error::FocalOutsideFrame {
                    set: r.bits(),
                    k: frame.k(),
                });
            }
        }
        Ok(RoughClustering { frame, regions })
    }

    pub fn from_soft(m: &SoftClustering) -> Result<Self> {
        if !is_rough(m) {
            return Err(Error::NotRough);
        }
        Ok(RoughClustering {
            frame: m.frame().clone(),
            regions: m.masses().iter().map(|mx| mx.focal()[0].0).collect(),
        })
    }

    pub fn from_hard(c: &HardClustering) -> Self {
        RoughClustering {
            frame: c.frame().clone(),
            regions: c.assignment().iter().map(|&l| FocalSet::singleton(l)).collect(),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn n(&self) -> usize {
        self.regions.len()
    }

    pub fn k(&self) -> usize {
        self.frame.k()
    }

    pub fn regions(&self) -> &[FocalSet] {
        &self.regions
    }

    pub fn region(&self, object: usize) -> FocalSet {
        self.regions[object]
    }

    pub fn is_hard(&self) -> bool {
        self.regions.iter().all(|r| r.is_singleton())
    }

    pub fn as_hard(&self) -> Option<HardClustering> {
        let a = self.regions.iter().map(|r| r.single()).collect::<Option<Vec<_>>>()?;
        HardClustering::new(self.frame.clone(), a).ok()
    }

    /// Objects whose region has more than one cluster.
    pub fn ambiguous_objects(&self) -> usize {
        self.regions.iter().filter(|r| !r.is_singleton()).count()
    }

    /// Number of compatible hard clusterings, saturating at `u128::MAX`.
    pub fn compatible_count(&self) -> u128 {
        self.regions
            .iter()
            .fold(1u128, |acc, r| acc.saturating_mul(r.len() as u128))
    }

    pub fn to_soft(&self) -> SoftClustering {
        SoftClustering::from_regions(self.frame.clone(), &self.regions).expect("regions validated")
    }

    /// Whether `c` picks, for every object, a cluster inside its region.
    pub fn is_compatible(&self, c: &HardClustering) -> bool {
        c.n() == self.n() && c.assignment().iter().zip(&self.regions).all(|(&l, r)| r.contains(l))
    }
}
