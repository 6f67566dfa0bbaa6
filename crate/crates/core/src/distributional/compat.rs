use std::collections::HashSet;

use crate::distributional::enumerate::ensure_budget;
use crate::distributional::{compatible_hcs, distribution_over_rcs, RoughClustering};
use crate::error::Result;
use crate::model::SoftClustering;

/// Canonical partitions (up to relabeling) of the clusterings compatible
/// with `r`.
pub fn compatible_classes(r: &RoughClustering, budget: u64) -> Result<HashSet<Vec<usize>>> {
    Ok(compatible_hcs(r, budget)?.map(|c| c.canonical()).collect())
}

/// Whether a single partition accounts for every compatible clustering of
/// every focal rough clustering of both inputs.
pub fn total_compatibility(m1: &SoftClustering, m2: &SoftClustering, budget: u64) -> Result<bool> {
    if m1.n() != m2.n() {
        return Ok(false);
    }
    let d1 = distribution_over_rcs(m1, budget)?;
    let d2 = distribution_over_rcs(m2, budget)?;
    ensure_budget(d1.compatible_total().saturating_add(d2.compatible_total()), budget)?;
    let mut target: Option<Vec<usize>> = None;
    for (r, _) in d1.focal().iter().chain(d2.focal()) {
        for c in compatible_hcs(r, budget)? {
            let canon = c.canonical();
            match &target {
                None => target = Some(canon),
                Some(t) if *t != canon => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}
