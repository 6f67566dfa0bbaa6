//! Mixed-radix Gray enumeration of compatible hard clusterings.
//!
//! Consecutive visits differ in exactly one coordinate, so callers can keep
//! incremental state (contingency tables, products) in O(1) per step.

use crate::distributional::RoughClustering;
use crate::error::{Error, Result};
use crate::metrics::{Contingency, HardDistance};
use crate::model::HardClustering;

/// Loopless reflected mixed-radix Gray code over radices `>= 2`.
#[derive(Clone, Debug)]
pub(crate) struct GrayWalk {
    radix: Vec<usize>,
    digits: Vec<usize>,
    up: Vec<bool>,
    focus: Vec<usize>,
}

impl GrayWalk {
    pub(crate) fn new(radix: Vec<usize>) -> Self {
        debug_assert!(radix.iter().all(|&r| r >= 2));
        let n = radix.len();
        GrayWalk {
            digits: vec![0; n],
            up: vec![true; n],
            focus: (0..=n).collect(),
            radix,
        }
    }

    pub(crate) fn digits(&self) -> &[usize] {
        &self.digits
    }

    /// Advance to the next tuple; returns `(coordinate, old, new)` or `None`
    /// once every tuple has been visited.
    pub(crate) fn step(&mut self) -> Option<(usize, usize, usize)> {
        let n = self.radix.len();
        let j = self.focus[0];
        self.focus[0] = 0;
        if j == n {
            return None;
        }
        let old = self.digits[j];
        let new = if self.up[j] { old + 1 } else { old - 1 };
        self.digits[j] = new;
        if new == 0 || new == self.radix[j] - 1 {
            self.up[j] = !self.up[j];
            self.focus[j] = self.focus[j + 1];
            self.focus[j + 1] = j + 1;
        }
        Some((j, old, new))
    }
}

/// Per-object choices for one side of an enumeration.
#[derive(Clone, Debug)]
pub(crate) struct Side {
    /// Assignment with every ambiguous object on its first choice.
    pub(crate) base: Vec<usize>,
    /// Ambiguous objects, ordered by ascending number of choices.
    pub(crate) objects: Vec<usize>,
    pub(crate) choices: Vec<Vec<usize>>,
    pub(crate) weights: Vec<Vec<f64>>,
    pub(crate) k: usize,
}

impl Side {
    /// Build from per-object `(cluster, weight)` options.
    pub(crate) fn new(options: Vec<Vec<(usize, f64)>>, k: usize) -> Self {
        let base = options.iter().map(|o| o[0].0).collect();
        let mut amb: Vec<usize> = (0..options.len()).filter(|&x| options[x].len() > 1).collect();
        amb.sort_by_key(|&x| (options[x].len(), x));
        Side {
            base,
            choices: amb.iter().map(|&x| options[x].iter().map(|o| o.0).collect()).collect(),
            weights: amb.iter().map(|&x| options[x].iter().map(|o| o.1).collect()).collect(),
            objects: amb,
            k,
        }
    }

    pub(crate) fn from_rough(r: &RoughClustering) -> Self {
        Side::new(
            r.regions().iter().map(|reg| reg.iter().map(|c| (c, 1.0)).collect()).collect(),
            r.k(),
        )
    }

    pub(crate) fn count(&self) -> u128 {
        self.choices
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    fn walk(&self) -> GrayWalk {
        GrayWalk::new(self.choices.iter().map(Vec::len).collect())
    }

    fn weight(&self, digits: &[usize], combine: Combine) -> f64 {
        digits
            .iter()
            .enumerate()
            .map(|(c, &d)| self.weights[c][d])
            .fold(1.0, |acc, w| combine.apply(acc, w))
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Combine {
    Product,
    Min,
}

impl Combine {
    pub(crate) fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            Combine::Product => a * b,
            Combine::Min => a.min(b),
        }
    }
}

pub(crate) fn ensure_budget(required: u128, budget: u64) -> Result<()> {
    if required > budget as u128 {
        Err(crate::distributional::budget_error(required, budget))
    } else {
        Ok(())
    }
}

/// Visit every pair of compatible clusterings with their distance and
/// combined per-side weights.
pub(crate) fn walk_pairs<D: HardDistance + ?Sized>(
    left: &Side,
    right: &Side,
    distance: &D,
    combine: Combine,
    mut visit: impl FnMut(f64, f64, f64),
) -> Result<()> {
    let n = left.base.len();
    if n != right.base.len() {
        return Err(Error::MismatchedObjectCount {
            left: n,
            right: right.base.len(),
        });
    }
    if n < 2 {
        return Err(Error::TooFewObjects { needed: 2, got: n });
    }
    let mut a1 = left.base.clone();
    let mut a2 = right.base.clone();
    let mut table = Contingency::from_assignments(&a1, left.k, &a2, right.k)?;
    let mut outer = left.walk();
    loop {
        let w1 = left.weight(outer.digits(), combine);
        let mut inner = right.walk();
        loop {
            let w2 = right.weight(inner.digits(), combine);
            visit(distance.from_table(&table), w1, w2);
            match inner.step() {
                Some((c, old, new)) => {
                    let x = right.objects[c];
                    let (from, to) = (right.choices[c][old], right.choices[c][new]);
                    table.move_right(a1[x], from, to);
                    a2[x] = to;
                }
                None => break,
            }
        }
        // Rewind the right side to its base assignment.
        for (c, &d) in inner.digits().iter().enumerate() {
            if d != 0 {
                let x = right.objects[c];
                table.move_right(a1[x], right.choices[c][d], right.choices[c][0]);
                a2[x] = right.choices[c][0];
            }
        }
        match outer.step() {
            Some((c, old, new)) => {
                let x = left.objects[c];
                let (from, to) = (left.choices[c][old], left.choices[c][new]);
                table.move_left(from, to, a2[x]);
                a1[x] = to;
            }
            None => break,
        }
    }
    Ok(())
}

/// Iterator over the hard clusterings compatible with a rough clustering.
pub struct CompatibleHcs {
    frame: crate::model::Frame,
    side: Side,
    current: Vec<usize>,
    walk: GrayWalk,
    started: bool,
    done: bool,
}

impl Iterator for CompatibleHcs {
    type Item = HardClustering;

    fn next(&mut self) -> Option<HardClustering> {
        if self.done {
            return None;
        }
        if self.started {
            match self.walk.step() {
                Some((c, _, new)) => self.current[self.side.objects[c]] = self.side.choices[c][new],
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        Some(HardClustering::new(self.frame.clone(), self.current.clone()).expect("regions lie in frame"))
    }
}

/// Every hard clustering `C` with `C(x)` in `R(x)` for all objects, each
/// exactly once.
pub fn compatible_hcs(r: &RoughClustering, budget: u64) -> Result<CompatibleHcs> {
    ensure_budget(r.compatible_count(), budget)?;
    let side = Side::from_rough(r);
    Ok(CompatibleHcs {
        frame: r.frame().clone(),
        current: side.base.clone(),
        walk: side.walk(),
        side,
        started: false,
        done: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{FocalSet, Frame};
    use std::collections::HashSet;

    #[test]
    fn gray_walk_visits_every_tuple_once() {
        let radix = vec![2, 3, 4];
        let mut w = GrayWalk::new(radix.clone());
        let mut seen = HashSet::new();
        seen.insert(w.digits().to_vec());
        let mut prev = w.digits().to_vec();
        while let Some((j, old, new)) = w.step() {
            let cur = w.digits().to_vec();
            let changed: Vec<_> = (0..3).filter(|&i| cur[i] != prev[i]).collect();
            assert_eq!(changed, vec![j]);
            assert_eq!((prev[j], cur[j]), (old, new));
            assert!(old.abs_diff(new) == 1);
            assert!(seen.insert(cur.clone()));
            prev = cur;
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn compatible_counts() {
        let f = Frame::with_size(2).unwrap();
        let r = RoughClustering::new(
            f.clone(),
            vec![FocalSet::full(2), FocalSet::singleton(0), FocalSet::singleton(1)],
        )
        .unwrap();
        assert_eq!(compatible_hcs(&r, 100).unwrap().count(), 2);
        let hard = RoughClustering::new(f.clone(), vec![FocalSet::singleton(0); 3]).unwrap();
        assert_eq!(compatible_hcs(&hard, 100).unwrap().count(), 1);
        let vacuous = RoughClustering::new(f, vec![FocalSet::full(2); 3]).unwrap();
        let all: HashSet<Vec<usize>> = compatible_hcs(&vacuous, 100)
            .unwrap()
            .map(|c| c.assignment().to_vec())
            .collect();
        assert_eq!(all.len(), 8);
        assert!(matches!(compatible_hcs(&vacuous, 7), Err(Error::BudgetExceeded { required: 8, .. })));
    }
}
