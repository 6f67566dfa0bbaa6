use serde::{Deserialize, Serialize};

use crate::TOLERANCE;

/// Sorted `(value, weight)` pairs with values merged when within `TOLERANCE`.
#[derive(Clone, Debug, Default)]
pub(crate) struct ValueAccumulator {
    entries: Vec<(f64, f64)>,
}

impl ValueAccumulator {
    pub(crate) fn add(&mut self, value: f64, weight: f64, merge: impl Fn(f64, f64) -> f64) {
        let i = self.entries.partition_point(|e| e.0 < value - TOLERANCE);
        match self.entries.get_mut(i) {
            Some(e) if (e.0 - value).abs() <= TOLERANCE => e.1 = merge(e.1, weight),
            _ => self.entries.insert(i, (value, weight)),
        }
    }

    pub(crate) fn into_entries(self) -> Vec<(f64, f64)> {
        self.entries
    }
}

/// A nonempty, sorted, deduplicated set of distance values.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValueSet(Vec<f64>);

impl ValueSet {
    pub fn from_values<I: IntoIterator<Item = f64>>(values: I) -> Self {
        let mut acc = ValueAccumulator::default();
        for v in values {
            acc.add(v, 0.0, |a, _| a);
        }
        let values: Vec<f64> = acc.into_entries().into_iter().map(|(v, _)| v).collect();
        assert!(!values.is_empty(), "a value set cannot be empty");
        ValueSet(values)
    }

    pub fn singleton(v: f64) -> Self {
        ValueSet(vec![v])
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.0[0]
    }

    pub fn max(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: f64) -> bool {
        self.0.iter().any(|x| (x - v).abs() <= TOLERANCE)
    }

    pub fn approx_eq(&self, other: &ValueSet) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| (a - b).abs() <= TOLERANCE)
    }
}

impl PartialEq for ValueSet {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistributionKind {
    Probability,
    Possibility,
}

/// Weights over distance values: a probability distribution (fuzzy case) or
/// a possibility distribution (possibilistic case).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueDistribution {
    pub kind: DistributionKind,
    pub entries: Vec<(f64, f64)>,
}

impl ValueDistribution {
    pub fn weight(&self, v: f64) -> f64 {
        self.entries
            .iter()
            .find(|(x, _)| (x - v).abs() <= TOLERANCE)
            .map_or(0.0, |e| e.1)
    }

    pub fn support(&self) -> ValueSet {
        ValueSet::from_values(self.entries.iter().map(|e| e.0))
    }

    /// Mean value; meaningful for probability distributions.
    pub fn expectation(&self) -> f64 {
        self.entries.iter().map(|(v, w)| v * w).sum()
    }

    pub fn total_weight(&self) -> f64 {
        self.entries.iter().map(|e| e.1).sum()
    }
}

/// A mass function over value sets.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ValueSetMass {
    pub entries: Vec<(ValueSet, f64)>,
}

impl ValueSetMass {
    pub fn add(&mut self, set: ValueSet, mass: f64) {
        match self.entries.iter_mut().find(|(s, _)| s.approx_eq(&set)) {
            Some((_, m)) => *m += mass,
            None => self.entries.push((set, mass)),
        }
    }

    pub fn merge(&mut self, other: ValueSetMass) {
        for (s, m) in other.entries {
            self.add(s, m);
        }
    }

    pub fn mass_of(&self, set: &ValueSet) -> f64 {
        self.entries
            .iter()
            .find(|(s, _)| s.approx_eq(set))
            .map_or(0.0, |e| e.1)
    }

    pub fn total_mass(&self) -> f64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Entries sorted by value set, for order-independent comparison.
    pub fn sorted(&self) -> Vec<(ValueSet, f64)> {
        let mut e = self.entries.clone();
        e.sort_by(|a, b| {
            a.0 .0
                .iter()
                .zip(&b.0 .0)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or_else(|| a.0.len().cmp(&b.0.len()))
        });
        e
    }

    pub fn approx_eq(&self, other: &ValueSetMass, tol: f64) -> bool {
        let (a, b) = (self.sorted(), other.sorted());
        a.len() == b.len()
            && a.iter()
                .zip(&b)
                .all(|((s1, m1), (s2, m2))| s1.approx_eq(s2) && (m1 - m2).abs() <= tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalSummary {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpectationSummary {
    pub lower_expectation: f64,
    pub upper_expectation: f64,
}

pub fn interval_summary(v: &ValueSet) -> IntervalSummary {
    IntervalSummary {
        lower: v.min(),
        upper: v.max(),
    }
}

pub fn expectation_summary(e: &ValueSetMass) -> ExpectationSummary {
    let (mut lower, mut upper) = (0.0, 0.0);
    for (set, m) in &e.entries {
        lower += m * set.min();
        upper += m * set.max();
    }
    ExpectationSummary {
        lower_expectation: lower,
        upper_expectation: upper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_sets_merge_close_values() {
        let v = ValueSet::from_values([0.5, 0.0, 0.5 + 1e-12, 2.0 / 3.0, 0.0]);
        assert_eq!(v.len(), 3);
        assert_eq!(v.min(), 0.0);
        assert!((v.max() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn interval_examples() {
        let s = interval_summary(&ValueSet::from_values([0.0, 2.0 / 3.0]));
        assert_eq!((s.lower, s.upper), (0.0, 2.0 / 3.0));
        let s = interval_summary(&ValueSet::singleton(0.5));
        assert_eq!((s.lower, s.upper), (0.5, 0.5));
    }

    #[test]
    fn expectation_examples() {
        let mut e = ValueSetMass::default();
        e.add(ValueSet::singleton(0.0), 0.6);
        e.add(ValueSet::from_values([0.0, 2.0 / 3.0]), 0.4);
        let s = expectation_summary(&e);
        assert_eq!(s.lower_expectation, 0.0);
        assert!((s.upper_expectation - 4.0 / 15.0).abs() < 1e-12);
        let mut d = ValueSetMass::default();
        d.add(ValueSet::singleton(0.3), 1.0);
        let s = expectation_summary(&d);
        assert_eq!((s.lower_expectation, s.upper_expectation), (0.3, 0.3));
    }

    #[test]
    fn equal_sets_merge_mass() {
        let mut e = ValueSetMass::default();
        e.add(ValueSet::from_values([0.0, 0.5]), 0.25);
        e.add(ValueSet::from_values([0.5, 0.0]), 0.25);
        assert_eq!(e.entries.len(), 1);
        assert_eq!(e.mass_of(&ValueSet::from_values([0.0, 0.5])), 0.5);
    }
}
