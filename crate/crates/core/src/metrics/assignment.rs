//! Minimum-cost perfect matching on a square matrix (Hungarian method with
//! row/column potentials, O(m^3)).

/// Returns the optimal cost and, for each row, the column it is matched to.
pub fn min_cost_assignment(cost: &[Vec<i64>]) -> (i64, Vec<usize>) {
    let m = cost.len();
    if m == 0 {
        return (0, Vec::new());
    }
    assert!(cost.iter().all(|r| r.len() == m), "cost matrix must be square");
    // 1-based indices; column 0 is a sentinel.
    let mut u = vec![0i64; m + 1];
    let mut v = vec![0i64; m + 1];
    let mut owner = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for row in 1..=m {
        owner[0] = row;
        let mut col0 = 0;
        let mut minv = vec![i64::MAX; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[col0] = true;
            let r = owner[col0];
            let mut delta = i64::MAX;
            let mut next = 0;
            for col in 1..=m {
                if used[col] {
                    continue;
                }
                let reduced = cost[r - 1][col - 1] - u[r] - v[col];
                if reduced < minv[col] {
                    minv[col] = reduced;
                    way[col] = col0;
                }
                if minv[col] < delta {
                    delta = minv[col];
                    next = col;
                }
            }
            for col in 0..=m {
                if used[col] {
                    u[owner[col]] += delta;
                    v[col] -= delta;
                } else {
                    minv[col] -= delta;
                }
            }
            col0 = next;
            if owner[col0] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col0];
            owner[col0] = owner[prev];
            col0 = prev;
            if col0 == 0 {
                break;
            }
        }
    }
    let mut matched = vec![0usize; m];
    for col in 1..=m {
        matched[owner[col] - 1] = col - 1;
    }
    let total = (0..m).map(|r| cost[r][matched[r]]).sum();
    (total, matched)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(cost: &[Vec<i64>]) -> i64 {
        fn rec(cost: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> i64 {
            if row == cost.len() {
                return 0;
            }
            let mut best = i64::MAX;
            for c in 0..cost.len() {
                if !used[c] {
                    used[c] = true;
                    best = best.min(cost[row][c] + rec(cost, row + 1, used));
                    used[c] = false;
                }
            }
            best
        }
        rec(cost, 0, &mut vec![false; cost.len()])
    }

    #[test]
    fn small_known_case() {
        let cost = vec![vec![4, 1, 3], vec![2, 0, 5], vec![3, 2, 2]];
        let (total, m) = min_cost_assignment(&cost);
        assert_eq!(total, 5);
        assert_eq!(m, vec![1, 0, 2]);
    }

    proptest! {
        #[test]
        fn matches_permutation_search(size in 1usize..6, seed in prop::collection::vec(-20i64..50, 36)) {
            let cost: Vec<Vec<i64>> = (0..size).map(|i| seed[i * 6..i * 6 + size].to_vec()).collect();
            let (total, matched) = min_cost_assignment(&cost);
            prop_assert_eq!(total, brute_force(&cost));
            let mut cols = matched.clone();
            cols.sort_unstable();
            prop_assert_eq!(cols, (0..size).collect::<Vec<_>>());
        }
    }
}
