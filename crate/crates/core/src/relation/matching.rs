//! Perfect matchings in the bipartite graph of a square Boolean matrix.
//!
//! Rows are left vertices, columns right vertices. Augmenting paths (Kuhn)
//! are searched in fixed row order with columns tried in ascending order, so
//! every result here is deterministic.

struct Kuhn<'a> {
    rows: &'a [u64],
    // owner[c] = row currently matched to column c
    owner: [u8; 64],
    visited: u64,
    allowed_cols: u64,
}

const FREE: u8 = u8::MAX;

impl<'a> Kuhn<'a> {
    fn new(rows: &'a [u64], allowed_cols: u64) -> Self {
        Kuhn {
            rows,
            owner: [FREE; 64],
            visited: 0,
            allowed_cols,
        }
    }

    fn augment(&mut self, row: usize) -> bool {
        let mut cands = self.rows[row] & self.allowed_cols & !self.visited;
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.visited >> c & 1 == 1 {
                continue;
            }
            self.visited |= 1 << c;
            let prev = self.owner[c];
            if prev == FREE || self.augment(prev as usize) {
                self.owner[c] = row as u8;
                return true;
            }
        }
        false
    }

    /// Tries to match every row in `rows_to_match` into the allowed columns.
    fn match_all(&mut self, rows_to_match: impl Iterator<Item = usize>) -> bool {
        for r in rows_to_match {
            self.visited = 0;
            if !self.augment(r) {
                return false;
            }
        }
        true
    }
}

/// True iff the `dim × dim` matrix contains a permutation matrix.
pub fn has_perfect_matching(rows: &[u64], dim: usize) -> bool {
    debug_assert_eq!(rows.len(), dim);
    let all = super::row_mask(dim);
    if rows.iter().any(|&r| r & all == 0) || rows.iter().fold(0, |a, &r| a | r) & all != all {
        return false;
    }
    Kuhn::new(rows, all).match_all(0..dim)
}

/// A perfect matching as an image array, if any (not necessarily minimal).
#[cfg(test)]
pub fn perfect_matching(rows: &[u64], dim: usize) -> Option<Vec<usize>> {
    let all = super::row_mask(dim);
    let mut k = Kuhn::new(rows, all);
    if !k.match_all(0..dim) {
        return None;
    }
    let mut image = vec![0; dim];
    for c in 0..dim {
        image[k.owner[c] as usize] = c;
    }
    Some(image)
}

/// The lexicographically smallest image array among all permutations
/// contained in the matrix.
///
/// Existence is decided by one matching run; then rows are fixed one at a
/// time to the smallest column that still leaves a perfect matching of the
/// remaining rows into the remaining columns.
pub fn lexicographic_matching(rows: &[u64], dim: usize) -> Option<Vec<usize>> {
    if !has_perfect_matching(rows, dim) {
        return None;
    }
    let mut free_cols = super::row_mask(dim);
    let mut image = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut cands = rows[i] & free_cols;
        let mut chosen = None;
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let rest = free_cols & !(1u64 << c);
            if Kuhn::new(rows, rest).match_all(i + 1..dim) {
                chosen = Some(c);
                break;
            }
        }
        // A perfect matching of rows i.. into free_cols exists by induction.
        let c = chosen.expect("matching lost during minimization");
        image.push(c);
        free_cols &= !(1u64 << c);
    }
    Some(image)
}
