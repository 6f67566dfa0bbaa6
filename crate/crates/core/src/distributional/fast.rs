use crate::error::{Error, Result};
use crate::model::{is_fuzzy, SoftClustering};

/// Expected `1 - Rand` distance between two fuzzy clusterings under their
/// product distributions, in O(n^2 k) without enumeration.
///
/// For a pair `{x, y}`, `s = sum_w mu_x(w) mu_y(w)` is the probability that
/// the pair is co-clustered; the pair agrees with probability
/// `s1 s2 + (1 - s1)(1 - s2)`.
pub fn fuzzy_rand_expectation_fast(f1: &SoftClustering, f2: &SoftClustering) -> Result<f64> {
    if !is_fuzzy(f1) || !is_fuzzy(f2) {
        return Err(Error::NotFuzzy);
    }
    if f1.n() != f2.n() {
        return Err(Error::MismatchedObjectCount {
            left: f1.n(),
            right: f2.n(),
        });
    }
    let n = f1.n();
    if n < 2 {
        return Err(Error::TooFewObjects { needed: 2, got: n });
    }
    let (u1, u2) = (f1.contours(), f2.contours());
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let mut agreement = 0.0;
    for x in 0..n {
        for y in x + 1..n {
            let s1 = dot(&u1[x], &u1[y]);
            let s2 = dot(&u2[x], &u2[y]);
            agreement += s1 * s2 + (1.0 - s1) * (1.0 - s2);
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok(1.0 - agreement / pairs)
}
