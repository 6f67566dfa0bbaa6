use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest frame a [`FocalSet`] bitmask can address.
pub const MAX_CLUSTERS: usize = 64;

/// The ordered set of cluster labels shared by the clusterings being compared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_CLUSTERS {
            return Err(Error::FrameTooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Frame {
            labels: labels.into(),
        })
    }

    /// A frame labelled `w1..wk`.
    pub fn with_size(k: usize) -> Result<Self> {
        Frame::new((1..=k).map(|i| format!("w{i}")))
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full_set(&self) -> FocalSet {
        FocalSet::full(self.k())
    }

    /// Resolve a list of labels into a focal set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<FocalSet> {
        let mut set = FocalSet::EMPTY;
        for l in labels {
            set = set.with(self.index_of(l.as_ref())?);
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: FocalSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A subset of the frame, stored as a bitmask over cluster indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FocalSet(u64);

impl FocalSet {
    pub const EMPTY: FocalSet = FocalSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        FocalSet(bits)
    }

    pub fn singleton(index: usize) -> Self {
        assert!(index < MAX_CLUSTERS, "cluster index {index} out of range");
        FocalSet(1u64 << index)
    }

    pub fn full(k: usize) -> Self {
        assert!(k <= MAX_CLUSTERS);
        if k == MAX_CLUSTERS {
            FocalSet(u64::MAX)
        } else {
            FocalSet((1u64 << k) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(FocalSet::EMPTY, FocalSet::with)
    }

    pub fn with(self, index: usize) -> Self {
        FocalSet(self.0 | FocalSet::singleton(index).0)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_singleton(self) -> bool {
        self.0 != 0 && self.0 & (self.0 - 1) == 0
    }

    /// The lone member of a singleton set.
    pub fn single(self) -> Option<usize> {
        self.is_singleton().then(|| self.0.trailing_zeros() as usize)
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_CLUSTERS && self.0 & (1u64 << index) != 0
    }

    pub const fn intersection(self, other: FocalSet) -> FocalSet {
        FocalSet(self.0 & other.0)
    }

    pub const fn union(self, other: FocalSet) -> FocalSet {
        FocalSet(self.0 | other.0)
    }

    pub const fn is_disjoint(self, other: FocalSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset_of(self, other: FocalSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Cluster indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
