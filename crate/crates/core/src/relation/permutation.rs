use std::fmt;

use itertools::Itertools;

use super::{check_dim, Relation};
use crate::error::{Error, Result};

/// A bijection on `{0, …, dim-1}` stored as its image array.
///
/// Permutations act on the right: `image[x]` is `xπ`, and the product `pq`
/// applies `p` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Permutation {
            image: (0..dim).collect(),
        })
    }

    /// Validates a 0-based image array.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        check_dim(image.len())?;
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    image.len()
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {} repeated",
                    x + 1
                )));
            }
        }
        Ok(Permutation { image })
    }

    /// Validates a 1-based image array.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(Error::InvalidPermutation("images are 1-based".into()));
        }
        Self::from_images(image.iter().map(|x| x - 1).collect())
    }

    pub(crate) fn from_images_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(image.clone()).is_ok());
        Permutation { image }
    }

    /// All permutations of degree `dim`, lexicographic by image array.
    pub fn all(dim: usize) -> Result<Vec<Permutation>> {
        check_dim(dim)?;
        if dim > 10 {
            return Err(Error::CapExceeded {
                what: "symmetric group degree",
                value: dim,
                limit: 10,
            });
        }
        Ok((0..dim)
            .permutations(dim)
            .map(|image| Permutation { image })
            .collect())
    }

    pub fn dim(&self) -> usize {
        self.image.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.image.iter().map(|x| x + 1).collect()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`: `x ↦ (xπ)σ`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Permutation {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.dim()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Permutation { image }
    }

    /// The relation `{(x, xπ)}`.
    pub fn to_relation(&self) -> Relation {
        Relation {
            dim: self.dim(),
            rows: self.image.iter().map(|&y| 1u64 << y).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_based())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_based().iter().join(","))
    }
}

/// Product `pq` (first `p`, then `q`).
pub fn perm_product(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.then(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert_eq!(
            Permutation::from_one_based(&[2, 1]).unwrap().images(),
            &[1, 0]
        );
    }

    #[test]
    fn products_and_inverses() {
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        let id = Permutation::identity(2).unwrap();
        assert_eq!(swap.then(&swap).unwrap(), id);
        assert_eq!(swap.then(&id).unwrap(), swap);
        for p in Permutation::all(4).unwrap() {
            assert!(p.then(&p.inverse()).unwrap().is_identity());
            assert!(p.inverse().then(&p).unwrap().is_identity());
        }
    }

    #[test]
    fn relation_product_matches_group_product() {
        let s3 = Permutation::all(3).unwrap();
        assert_eq!(s3.len(), 6);
        for p in &s3 {
            let r = p.to_relation();
            assert!(r.rows().iter().all(|row| row.count_ones() == 1));
            assert_eq!(r.transpose().rows().iter().map(|x| x.count_ones()).sum::<u32>(), 3);
            for q in &s3 {
                assert_eq!(
                    p.then(q).unwrap().to_relation(),
                    p.to_relation().compose(&q.to_relation()).unwrap()
                );
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let s3 = Permutation::all(3).unwrap();
        assert!(s3.windows(2).all(|w| w[0] < w[1]));
        assert!(s3[0].is_identity());
        assert_eq!(s3[1].to_string(), "[1,3,2]");
    }
}
