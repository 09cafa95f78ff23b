//! Binary relations on a finite ground set, stored as Boolean matrices.
//!
//! A [`Relation`] of dimension `n` keeps one `u64` per row; bit `j` of row
//! `i` is set iff `(i, j)` belongs to the relation. Products follow the
//! "first `r`, then `s`" convention: `(i, j) ∈ rs` iff some `z` has
//! `(i, z) ∈ r` and `(z, j) ∈ s`. Permutations act on the right and are
//! identified with the relations `{(x, xπ)}`.

mod format;
pub(crate) mod matching;
mod permanent;
mod permutation;

use std::fmt;

use crate::error::{Error, Result};

pub use format::{emit_relmat, parse_relmat};
pub use permanent::{boolean_permanent, permanent_count, PERMANENT_MAX_DIM};
pub use permutation::{perm_product, Permutation};

/// Largest supported ground set.
pub const MAX_DIM: usize = 64;

#[inline]
pub(crate) fn row_mask(dim: usize) -> u64 {
    if dim >= 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(Error::InvalidDimension(dim))
    } else {
        Ok(())
    }
}

/// Boolean product of two row-packed matrices of equal dimension.
#[inline]
pub(crate) fn compose_rows(r: &[u64], s: &[u64], out: &mut [u64]) {
    for (dst, &row) in out.iter_mut().zip(r) {
        let mut acc = 0u64;
        let mut bits = row;
        while bits != 0 {
            let z = bits.trailing_zeros() as usize;
            acc |= s[z];
            bits &= bits - 1;
        }
        *dst = acc;
    }
}

/// A binary relation on `{0, …, dim-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    dim: usize,
    rows: Vec<u64>,
}

impl Relation {
    /// The empty relation.
    pub fn empty(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Relation {
            dim,
            rows: vec![0; dim],
        })
    }

    /// The equality relation `Δ`.
    pub fn identity(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Relation {
            dim,
            rows: (0..dim).map(|i| 1u64 << i).collect(),
        })
    }

    /// The universal relation (all-ones matrix).
    pub fn full(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Relation {
            dim,
            rows: vec![row_mask(dim); dim],
        })
    }

    /// Builds a relation from packed rows; bits beyond column `dim` are rejected.
    pub fn from_rows(dim: usize, rows: Vec<u64>) -> Result<Self> {
        check_dim(dim)?;
        if rows.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: rows.len(),
            });
        }
        let mask = row_mask(dim);
        if let Some(i) = rows.iter().position(|&r| r & !mask != 0) {
            return Err(Error::InvalidArgument(format!(
                "row {i} has bits beyond column {dim}"
            )));
        }
        Ok(Relation { dim, rows })
    }

    /// Builds a relation from 0-based pairs.
    pub fn from_pairs(dim: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Relation::empty(dim)?;
        for &(i, j) in pairs {
            rel.insert(i, j)?;
        }
        Ok(rel)
    }

    /// Decodes the row-major integer code produced by [`Relation::code`].
    pub fn from_code(dim: usize, code: u64) -> Result<Self> {
        check_dim(dim)?;
        if dim * dim > 64 || (dim * dim < 64 && code >> (dim * dim) != 0) {
            return Err(Error::InvalidArgument(format!(
                "code {code} does not describe a {dim}x{dim} matrix"
            )));
        }
        let mask = row_mask(dim);
        let rows = (0..dim).map(|i| (code >> (i * dim)) & mask).collect();
        Ok(Relation { dim, rows })
    }

    /// Row-major integer code: row `i` occupies bits `i*n .. i*n + n`.
    ///
    /// Only available for `dim ≤ 8`. Materialized monoids order their elements
    /// by this code.
    pub fn code(&self) -> Option<u64> {
        if self.dim * self.dim > 64 {
            return None;
        }
        Some(
            self.rows
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &r)| acc | (r << (i * self.dim))),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        i < self.dim && j < self.dim && self.rows[i] >> j & 1 == 1
    }

    pub fn insert(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::OutOfRange {
                index: i.max(j),
                order: self.dim,
            });
        }
        self.rows[i] |= 1 << j;
        Ok(())
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// All pairs, 0-based, in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len());
        for (i, &row) in self.rows.iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                out.push((i, bits.trailing_zeros() as usize));
                bits &= bits - 1;
            }
        }
        out
    }

    fn same_dim(&self, other: &Relation) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        } else {
            Ok(())
        }
    }

    /// Relational product `self · other`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.same_dim(other)?;
        let mut rows = vec![0; self.dim];
        compose_rows(&self.rows, &other.rows, &mut rows);
        Ok(Relation {
            dim: self.dim,
            rows,
        })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_dim(other)?;
        Ok(Relation {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a | b)
                .collect(),
        })
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Relation) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| b & !a == 0))
    }

    pub fn transpose(&self) -> Relation {
        let mut rows = vec![0u64; self.dim];
        for (i, j) in self.pairs() {
            rows[j] |= 1 << i;
        }
        Relation {
            dim: self.dim,
            rows,
        }
    }

    /// True iff `Δ ⊆ self`.
    pub fn is_reflexive(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &r)| r >> i & 1 == 1)
    }

    pub fn is_idempotent(&self) -> bool {
        let mut sq = vec![0; self.dim];
        compose_rows(&self.rows, &self.rows, &mut sq);
        sq == self.rows
    }

    /// Returns the lexicographically smallest permutation (by image array)
    /// contained in the relation, or `None` if the relation is not Hall.
    pub fn hall_witness(&self) -> Option<Permutation> {
        matching::lexicographic_matching(&self.rows, self.dim)
            .map(|image| Permutation::from_images_unchecked(image))
    }

    /// True iff the relation contains some permutation.
    pub fn is_hall(&self) -> bool {
        matching::has_perfect_matching(&self.rows, self.dim)
    }

    /// `π · self · π⁻¹`, i.e. `(x, y)` is related iff `(xπ, yπ) ∈ self`.
    pub fn conjugate(&self, p: &Permutation) -> Result<Relation> {
        let pr = p.to_relation();
        pr.compose(self)?.compose(&p.inverse().to_relation())
    }

    /// Label used for materialized monoids: rows as 0/1 strings joined by `/`.
    pub fn label(&self) -> String {
        let mut s = String::with_capacity(self.dim * (self.dim + 1));
        for (i, &row) in self.rows.iter().enumerate() {
            if i > 0 {
                s.push('/');
            }
            for j in 0..self.dim {
                s.push(if row >> j & 1 == 1 { '1' } else { '0' });
            }
        }
        s
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({})", self.label())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Relational product as a free function.
pub fn compose(r: &Relation, s: &Relation) -> Result<Relation> {
    r.compose(s)
}

/// Conjugation `p · r · p⁻¹`.
pub fn conjugate(p: &Permutation, r: &Relation) -> Result<Relation> {
    r.conjugate(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(dim: usize, pairs: &[(usize, usize)]) -> Relation {
        // 1-based pairs, matching how the examples are written down.
        let zero: Vec<_> = pairs.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        Relation::from_pairs(dim, &zero).unwrap()
    }

    #[test]
    fn rejects_degenerate_dimensions() {
        assert_eq!(Relation::empty(0), Err(Error::InvalidDimension(0)));
        assert_eq!(Relation::identity(65), Err(Error::InvalidDimension(65)));
        assert!(Relation::full(64).unwrap().is_reflexive());
    }

    #[test]
    fn single_chain_product() {
        let r = rel(2, &[(1, 2)]);
        let s = rel(2, &[(2, 1)]);
        assert_eq!(r.compose(&s).unwrap(), rel(2, &[(1, 1)]));
        assert_eq!(s.compose(&r).unwrap(), rel(2, &[(2, 2)]));
    }

    #[test]
    fn identity_is_neutral() {
        let d = Relation::identity(3).unwrap();
        for code in 0..512 {
            let r = Relation::from_code(3, code).unwrap();
            assert_eq!(d.compose(&r).unwrap(), r);
            assert_eq!(r.compose(&d).unwrap(), r);
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Relation::identity(2).unwrap();
        let b = Relation::identity(3).unwrap();
        assert!(matches!(
            a.compose(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
        assert!(a.union(&b).is_err());
        assert!(a.contains(&b).is_err());
    }

    #[test]
    fn reflexivity() {
        assert!(Relation::identity(4).unwrap().is_reflexive());
        assert!(Relation::full(3).unwrap().is_reflexive());
        assert!(!rel(2, &[(1, 2), (2, 1)]).is_reflexive());
    }

    #[test]
    fn plumbing_ops() {
        let r = rel(3, &[(1, 2), (3, 3)]);
        assert_eq!(r.union(&r).unwrap(), r);
        assert!(Relation::full(3).unwrap().contains(&r).unwrap());
        assert!(!r.contains(&Relation::full(3).unwrap()).unwrap());
        assert_eq!(r.transpose(), rel(3, &[(2, 1), (3, 3)]));
        assert_eq!(r.transpose().transpose(), r);
    }

    #[test]
    fn code_round_trip() {
        for code in 0..(1u64 << 9) {
            let r = Relation::from_code(3, code).unwrap();
            assert_eq!(r.code(), Some(code));
        }
        assert!(Relation::from_code(2, 16).is_err());
        assert_eq!(rel(2, &[(1, 1), (2, 2)]).code(), Some(9));
    }

    #[test]
    fn conjugation_by_swap() {
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        let r = rel(2, &[(1, 1), (2, 2), (1, 2)]);
        assert_eq!(r.conjugate(&swap).unwrap(), rel(2, &[(1, 1), (2, 2), (2, 1)]));
        let id = Permutation::identity(2).unwrap();
        assert_eq!(r.conjugate(&id).unwrap(), r);
        let delta = Relation::identity(2).unwrap();
        assert_eq!(delta.conjugate(&swap).unwrap(), delta);
    }

    #[test]
    fn conjugation_matches_pointwise_formula() {
        // (x, y) ∈ πρπ⁻¹ iff (xπ, yπ) ∈ ρ
        let perms = Permutation::all(3).unwrap();
        for code in (0..512).step_by(7) {
            let r = Relation::from_code(3, code).unwrap();
            for p in &perms {
                let c = r.conjugate(p).unwrap();
                for x in 0..3 {
                    for y in 0..3 {
                        assert_eq!(c.get(x, y), r.get(p.apply(x), p.apply(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn hall_witness_examples() {
        let full = Relation::full(4).unwrap();
        assert_eq!(full.hall_witness(), Some(Permutation::identity(4).unwrap()));
        let zero_row = rel(3, &[(1, 1), (1, 2), (3, 3)]);
        assert_eq!(zero_row.hall_witness(), None);
        let r = rel(2, &[(1, 2), (2, 1), (1, 1)]);
        assert_eq!(
            r.hall_witness(),
            Some(Permutation::from_images(vec![1, 0]).unwrap())
        );
    }

    #[test]
    fn label_format() {
        assert_eq!(Relation::identity(2).unwrap().label(), "10/01");
        assert_eq!(format!("{:?}", Relation::full(1).unwrap()), "Relation(1)");
    }
}
