use crate::error::{Error, Result};
use crate::metrics::assignment::min_cost_assignment;
use crate::model::HardClustering;

/// Cluster-overlap counts between two hard clusterings of the same objects.
///
/// Tracks the pair counts needed by the Rand index so that moving a single
/// object updates it in constant time.
#[derive(Clone, Debug)]
pub struct Contingency {
    rows: usize,
    cols: usize,
    n: usize,
    cells: Vec<u64>,
    row_sums: Vec<u64>,
    col_sums: Vec<u64>,
    both_pairs: u64,
    row_pairs: u64,
    col_pairs: u64,
}

fn pairs(c: u64) -> u64 {
    c * c.saturating_sub(1) / 2
}

impl Contingency {
    /// `left[x]` indexes rows (`< rows`), `right[x]` indexes columns.
    pub fn from_assignments(left: &[usize], rows: usize, right: &[usize], cols: usize) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::MismatchedObjectCount {
                left: left.len(),
                right: right.len(),
            });
        }
        let mut t = Contingency {
            rows,
            cols,
            n: left.len(),
            cells: vec![0; rows * cols],
            row_sums: vec![0; rows],
            col_sums: vec![0; cols],
            both_pairs: 0,
            row_pairs: 0,
            col_pairs: 0,
        };
        for (&a, &b) in left.iter().zip(right) {
            t.cells[a * cols + b] += 1;
            t.row_sums[a] += 1;
            t.col_sums[b] += 1;
        }
        t.both_pairs = t.cells.iter().map(|&c| pairs(c)).sum();
        t.row_pairs = t.row_sums.iter().map(|&c| pairs(c)).sum();
        t.col_pairs = t.col_sums.iter().map(|&c| pairs(c)).sum();
        Ok(t)
    }

    pub fn new(left: &HardClustering, right: &HardClustering) -> Result<Self> {
        Contingency::from_assignments(left.assignment(), left.k(), right.assignment(), right.k())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell(&self, row: usize, col: usize) -> u64 {
        self.cells[row * self.cols + col]
    }

    pub fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[u64] {
        &self.col_sums
    }

    /// Move one object whose right-hand cluster is `col` from row `from` to row `to`.
    pub fn move_left(&mut self, from: usize, to: usize, col: usize) {
        if from == to {
            return;
        }
        let src = from * self.cols + col;
        let dst = to * self.cols + col;
        self.both_pairs = self.both_pairs - (self.cells[src] - 1) + self.cells[dst];
        self.row_pairs = self.row_pairs - (self.row_sums[from] - 1) + self.row_sums[to];
        self.cells[src] -= 1;
        self.cells[dst] += 1;
        self.row_sums[from] -= 1;
        self.row_sums[to] += 1;
    }

    /// Move one object whose left-hand cluster is `row` from column `from` to column `to`.
    pub fn move_right(&mut self, row: usize, from: usize, to: usize) {
        if from == to {
            return;
        }
        let src = row * self.cols + from;
        let dst = row * self.cols + to;
        self.both_pairs = self.both_pairs - (self.cells[src] - 1) + self.cells[dst];
        self.col_pairs = self.col_pairs - (self.col_sums[from] - 1) + self.col_sums[to];
        self.cells[src] -= 1;
        self.cells[dst] += 1;
        self.col_sums[from] -= 1;
        self.col_sums[to] += 1;
    }

    /// Unordered object pairs on which the two clusterings disagree.
    pub fn disagreeing_pairs(&self) -> u64 {
        self.row_pairs + self.col_pairs - 2 * self.both_pairs
    }

    pub fn total_pairs(&self) -> u64 {
        pairs(self.n as u64)
    }

    /// Minimum number of objects to move to turn one clustering into the
    /// other, via an optimal cluster matching on the padded square table.
    pub fn min_moves(&self) -> u64 {
        let m = self.rows.max(self.cols);
        let size = |sums: &[u64], i: usize| sums.get(i).copied().unwrap_or(0) as i64;
        let cost: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let overlap = if i < self.rows && j < self.cols {
                            self.cell(i, j) as i64
                        } else {
                            0
                        };
                        size(&self.row_sums, i) + size(&self.col_sums, j) - 2 * overlap
                    })
                    .collect()
            })
            .collect();
        let (total, _) = min_cost_assignment(&cost);
        (total / 2) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incremental_moves_match_rebuild() {
        let left = [0, 0, 1, 2, 1];
        let right = [1, 1, 0, 0, 2];
        let mut t = Contingency::from_assignments(&left, 3, &right, 3).unwrap();
        t.move_left(0, 2, 1);
        let rebuilt = Contingency::from_assignments(&[2, 0, 1, 2, 1], 3, &right, 3).unwrap();
        assert_eq!(t.disagreeing_pairs(), rebuilt.disagreeing_pairs());
        t.move_right(1, 2, 0);
        let rebuilt = Contingency::from_assignments(&[2, 0, 1, 2, 1], 3, &[1, 1, 0, 0, 0], 3).unwrap();
        assert_eq!(t.disagreeing_pairs(), rebuilt.disagreeing_pairs());
        assert_eq!(t.min_moves(), rebuilt.min_moves());
    }
}
