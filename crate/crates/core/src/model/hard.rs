use crate::error::{Error, Result};
use crate::model::{FocalSet, Frame, MassFunction, SoftClustering};

/// A total assignment of `n` objects to clusters of a frame.
///
/// Empty clusters are allowed. Two hard clusterings describing the same
/// partition under different labels are distinct values but
/// [`equivalent`](crate::model::equivalent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardClustering {
    frame: Frame,
    assignment: Vec<usize>,
}

impl HardClustering {
    pub fn new(frame: Frame, assignment: Vec<usize>) -> Result<Self> {
        if assignment.is_empty() {
            return Err(Error::NoObjects);
        }
        if let Some(&bad) = assignment.iter().find(|&&c| c >= frame.k()) {
            return Err(Error::UnknownLabel(format!("#{bad}")));
        }
        Ok(HardClustering { frame, assignment })
    }

    /// Build from cluster labels, one per object.
    pub fn from_labels<S: AsRef<str>>(frame: Frame, labels: &[S]) -> Result<Self> {
        let assignment = labels
            .iter()
            .map(|l| frame.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        HardClustering::new(frame, assignment)
    }

    /// Build over a fresh `w1..wk` frame, where `k` is one more than the
    /// largest index used.
    pub fn from_indices(assignment: &[usize]) -> Result<Self> {
        let k = assignment.iter().copied().max().map_or(1, |m| m + 1);
        HardClustering::new(Frame::with_size(k)?, assignment.to_vec())
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn k(&self) -> usize {
        self.frame.k()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn cluster_of(&self, object: usize) -> usize {
        self.assignment[object]
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k()];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }

    /// Labels renumbered by first occurrence; equal for exactly the
    /// clusterings that induce the same partition.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_form(&self.assignment, self.k())
    }

    /// Apply `perm` to the cluster labels (cluster `c` becomes `perm[c]`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        HardClustering::new(
            self.frame.clone(),
            self.assignment.iter().map(|&c| perm[c]).collect(),
        )
    }

    pub fn to_soft(&self) -> SoftClustering {
        let masses = self
            .assignment
            .iter()
            .map(|&c| MassFunction::categorical(FocalSet::singleton(c)))
            .collect();
        SoftClustering::from_parts(self.frame.clone(), masses)
    }
}

pub(crate) fn canonical_form(assignment: &[usize], k: usize) -> Vec<usize> {
    let mut map = vec![usize::MAX; k];
    let mut next = 0;
    assignment
        .iter()
        .map(|&c| {
            if map[c] == usize::MAX {
                map[c] = next;
                next += 1;
            }
            map[c]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_ignores_labels() {
        let a = HardClustering::from_indices(&[2, 2, 0, 1]).unwrap();
        let b = HardClustering::from_indices(&[0, 0, 1, 2]).unwrap();
        assert_eq!(a.canonical(), vec![0, 0, 1, 2]);
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(a.cluster_sizes(), vec![1, 1, 2]);
    }

    #[test]
    fn rejects_out_of_frame_labels() {
        let f = Frame::with_size(2).unwrap();
        assert!(HardClustering::new(f.clone(), vec![0, 2]).is_err());
        assert!(matches!(HardClustering::new(f.clone(), vec![]), Err(Error::NoObjects)));
        assert!(matches!(
            HardClustering::from_labels(f, &["w1", "x"]),
            Err(Error::UnknownLabel(_))
        ));
    }
}
