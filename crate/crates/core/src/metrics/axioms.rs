use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::TOLERANCE;

/// Hausdorff distance between two finite point sets under `d`.
pub fn hausdorff<T>(a: &[T], b: &[T], d: impl Fn(&T, &T) -> f64) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let directed = |from: &[T], to: &[T], flip: bool| {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| if flip { d(q, p) } else { d(p, q) })
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(f64::NEG_INFINITY, f64::max)
    };
    Ok(directed(a, b, false).max(directed(b, a, true)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    /// d(x, x) = 0
    M1,
    /// d(x, y) = 0 implies x = y
    M1b,
    /// x != y implies d(x, y) > 0
    M2,
    /// symmetry
    M3,
    /// triangle inequality
    M4,
    /// values bounded by 1
    Normalized,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub axiom: Axiom,
    /// Indices into the checked point list.
    pub points: Vec<usize>,
    pub values: Vec<f64>,
}

/// Outcome of an exhaustive axiom check over a finite point list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub holds_m1: bool,
    pub holds_m1b: bool,
    pub holds_m2: bool,
    pub holds_m3: bool,
    pub holds_m4: bool,
    pub is_normalized: bool,
    pub max_value: f64,
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomReport {
    pub fn is_metric(&self) -> bool {
        self.holds_m1 && self.holds_m2 && self.holds_m3 && self.holds_m4
    }

    pub fn is_pseudo_metric(&self) -> bool {
        self.holds_m1 && self.holds_m3 && self.holds_m4
    }

    pub fn is_semi_metric(&self) -> bool {
        self.holds_m1 && self.holds_m2 && self.holds_m3
    }

    pub fn is_meta_metric(&self) -> bool {
        self.holds_m1b && self.holds_m2 && self.holds_m3 && self.holds_m4
    }

    pub fn counterexamples_for(&self, axiom: Axiom) -> impl Iterator<Item = &Counterexample> {
        self.counterexamples.iter().filter(move |c| c.axiom == axiom)
    }

    /// Most specific class name the checked function falls into.
    pub fn verdict(&self) -> &'static str {
        if self.is_metric() {
            "metric"
        } else if self.is_meta_metric() {
            "meta-metric"
        } else if self.is_pseudo_metric() {
            "pseudo-metric"
        } else if self.is_semi_metric() {
            "semi-metric"
        } else {
            "none"
        }
    }
}

const MAX_EXAMPLES_PER_AXIOM: usize = 5;

/// Check (M1), (M1b), (M2), (M3) over all pairs and (M4) over all triples.
pub fn check_axioms<T>(
    points: &[T],
    d: impl Fn(&T, &T) -> f64,
    eq: impl Fn(&T, &T) -> bool,
) -> AxiomReport {
    check_axioms_restricted(points, d, eq, |_, _| true)
}

/// Like [`check_axioms`], but only pairs accepted by `admissible` are
/// evaluated, and (M4) only over triples whose three pairs are admissible.
pub fn check_axioms_restricted<T>(
    points: &[T],
    d: impl Fn(&T, &T) -> f64,
    eq: impl Fn(&T, &T) -> bool,
    admissible: impl Fn(&T, &T) -> bool,
) -> AxiomReport {
    let n = points.len();
    let mut ok = vec![false; n * n];
    let mut dist = vec![f64::NAN; n * n];
    for i in 0..n {
        for j in 0..n {
            if admissible(&points[i], &points[j]) {
                ok[i * n + j] = true;
                dist[i * n + j] = d(&points[i], &points[j]);
            }
        }
    }
    let mut report = AxiomReport {
        holds_m1: true,
        holds_m1b: true,
        holds_m2: true,
        holds_m3: true,
        holds_m4: true,
        is_normalized: true,
        max_value: f64::NEG_INFINITY,
        counterexamples: Vec::new(),
    };
    let mut counts = [0usize; 6];
    let mut record = |report: &mut AxiomReport, axiom: Axiom, pts: Vec<usize>, values: Vec<f64>| {
        let slot = axiom as usize;
        match axiom {
            Axiom::M1 => report.holds_m1 = false,
            Axiom::M1b => report.holds_m1b = false,
            Axiom::M2 => report.holds_m2 = false,
            Axiom::M3 => report.holds_m3 = false,
            Axiom::M4 => report.holds_m4 = false,
            Axiom::Normalized => report.is_normalized = false,
        }
        if counts[slot] < MAX_EXAMPLES_PER_AXIOM {
            counts[slot] += 1;
            report.counterexamples.push(Counterexample {
                axiom,
                points: pts,
                values,
            });
        }
    };
    for i in 0..n {
        for j in 0..n {
            if !ok[i * n + j] {
                continue;
            }
            let v = dist[i * n + j];
            report.max_value = report.max_value.max(v);
            if v > 1.0 + TOLERANCE {
                record(&mut report, Axiom::Normalized, vec![i, j], vec![v]);
            }
            let same = i == j || eq(&points[i], &points[j]);
            if i == j && v.abs() > TOLERANCE {
                record(&mut report, Axiom::M1, vec![i], vec![v]);
            }
            if v.abs() <= TOLERANCE && !same {
                record(&mut report, Axiom::M1b, vec![i, j], vec![v]);
            }
            if !same && v <= TOLERANCE {
                record(&mut report, Axiom::M2, vec![i, j], vec![v]);
            }
            if ok[j * n + i] && (v - dist[j * n + i]).abs() > TOLERANCE {
                record(&mut report, Axiom::M3, vec![i, j], vec![v, dist[j * n + i]]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !ok[x * n + y] {
                continue;
            }
            for z in 0..n {
                if !ok[y * n + z] || !ok[x * n + z] {
                    continue;
                }
                let (xz, xy, yz) = (dist[x * n + z], dist[x * n + y], dist[y * n + z]);
                if xz > xy + yz + TOLERANCE {
                    record(&mut report, Axiom::M4, vec![x, y, z], vec![xz, xy, yz]);
                }
            }
        }
    }
    if n == 0 {
        report.max_value = 0.0;
    }
    report
}

/// Every set partition of `n` objects, as restricted-growth label vectors.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for c in 0..=limit {
            prefix.push(c);
            rec(prefix, max.max(c), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut Vec::with_capacity(n), 0, n, &mut out);
    }
    out
}
