//! Power semigroups and the embedding `A ↦ ρ_A` of `P(G)` into the Hall monoid.

use std::collections::HashMap;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::relation::{Permutation, Relation, MAX_DIM};
use crate::semigroup::{FiniteSemigroup, MAX_ORDER};

/// `2^|S| - 1` must fit the semigroup table cap.
pub const POWER_SEMIGROUP_MAX_BASE: usize = 12;

/// `AB = {ab | a ∈ A, b ∈ B}` for element masks of `s`.
pub fn subset_product(s: &FiniteSemigroup, a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    let mut xs = a;
    while xs != 0 {
        let x = xs.trailing_zeros() as usize;
        xs &= xs - 1;
        let mut ys = b;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            out |= 1 << s.mul(x, y);
        }
    }
    out
}

fn mask_label(s: &FiniteSemigroup, mask: u64) -> String {
    let members: Vec<&str> = (0..s.order())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| s.label(i))
        .collect();
    format!("{{{}}}", members.join(";"))
}

/// `P(S)` with element `i` standing for the nonempty mask `i + 1`.
#[derive(Debug, Clone)]
pub struct PowerSemigroup {
    pub semigroup: FiniteSemigroup,
}

impl PowerSemigroup {
    pub fn mask(&self, index: usize) -> u64 {
        index as u64 + 1
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        (mask != 0 && mask as usize <= self.semigroup.order()).then(|| mask as usize - 1)
    }
}

/// The power semigroup of all nonempty subsets, ordered by mask value.
pub fn power_semigroup(s: &FiniteSemigroup) -> Result<PowerSemigroup> {
    let m = s.order();
    if m > POWER_SEMIGROUP_MAX_BASE {
        return Err(Error::CapExceeded {
            what: "power semigroup base order",
            value: m,
            limit: POWER_SEMIGROUP_MAX_BASE,
        });
    }
    let k = (1usize << m) - 1;
    debug_assert!(k <= MAX_ORDER);
    // left[x][B] = xB, so AB is an OR over x ∈ A.
    let left: Vec<Vec<u64>> = (0..m)
        .map(|x| (0..=k as u64).map(|b| subset_product(s, 1 << x, b)).collect())
        .collect();
    let labels = (1..=k as u64).map(|mask| mask_label(s, mask)).collect();
    let semigroup = FiniteSemigroup::from_fn(labels, |i, j| {
        let (a, b) = (i as u64 + 1, j + 1);
        let mut out = 0u64;
        let mut xs = a;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            out |= left[x][b];
        }
        out as usize - 1
    })?;
    Ok(PowerSemigroup { semigroup })
}

/// A nonempty subset of a group.
#[derive(Debug, Clone, Copy)]
pub struct GroupSubset<'g> {
    group: &'g FiniteGroup,
    mask: u64,
}

impl<'g> GroupSubset<'g> {
    pub fn new(group: &'g FiniteGroup, mask: u64) -> Result<Self> {
        if mask == 0 {
            return Err(Error::EmptySubset);
        }
        if group.order() < 64 && mask >> group.order() != 0 {
            return Err(Error::OutOfRange {
                index: 64 - mask.leading_zeros() as usize - 1,
                order: group.order(),
            });
        }
        Ok(GroupSubset { group, mask })
    }

    pub fn from_elements(group: &'g FiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &g in elements {
            if g >= group.order() || g >= 64 {
                return Err(Error::OutOfRange {
                    index: g,
                    order: group.order(),
                });
            }
            mask |= 1 << g;
        }
        Self::new(group, mask)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, g: usize) -> bool {
        g < 64 && self.mask >> g & 1 == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.group.order().min(64)).filter(|&g| self.contains(g))
    }

    pub fn product(&self, other: &GroupSubset<'g>) -> GroupSubset<'g> {
        GroupSubset {
            group: self.group,
            mask: subset_product(self.group.semigroup(), self.mask, other.mask),
        }
    }

    /// `ρ_A = {(g, h) | g⁻¹h ∈ A}` on the ground set of group indices.
    pub fn hall_relation(&self) -> Relation {
        let g = self.group;
        let n = g.order();
        let rows = (0..n)
            .map(|x| {
                let inv = g.inverse(x);
                (0..n)
                    .filter(|&h| self.contains(g.mul(inv, h)))
                    .fold(0u64, |acc, h| acc | 1 << h)
            })
            .collect();
        Relation::from_rows(n, rows).expect("group order checked against MAX_DIM")
    }

    /// The permutation `g ↦ ga` for the least `a ∈ A`; it lies inside `ρ_A`.
    pub fn translation_witness(&self) -> Permutation {
        let a = self.mask.trailing_zeros() as usize;
        Permutation::from_images_unchecked(
            (0..self.group.order()).map(|g| self.group.mul(g, a)).collect(),
        )
    }
}

fn check_embedding_dim(group: &FiniteGroup) -> Result<()> {
    if group.order() > MAX_DIM {
        return Err(Error::CapExceeded {
            what: "group order for the Hall embedding",
            value: group.order(),
            limit: MAX_DIM,
        });
    }
    Ok(())
}

/// `ρ_A` for the subset with the given element mask.
pub fn hall_relation(group: &FiniteGroup, mask: u64) -> Result<Relation> {
    check_embedding_dim(group)?;
    Ok(GroupSubset::new(group, mask)?.hall_relation())
}

/// `ρ_A` for every nonempty subset, indexed like [`PowerSemigroup`].
pub fn hall_embedding(group: &FiniteGroup) -> Result<Vec<Relation>> {
    check_embedding_dim(group)?;
    if group.order() > POWER_SEMIGROUP_MAX_BASE {
        return Err(Error::CapExceeded {
            what: "group order for enumerating subsets",
            value: group.order(),
            limit: POWER_SEMIGROUP_MAX_BASE,
        });
    }
    (1..1u64 << group.order())
        .map(|mask| hall_relation(group, mask))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingVerdict {
    pub group_order: usize,
    pub subsets: usize,
    pub pairs_checked: u64,
    /// Every `ρ_A` contains the translation `g ↦ ga` and is Hall.
    pub all_hall: bool,
    pub injective: bool,
    pub homomorphism: bool,
    /// First `(A, B)` (masks) with `ρ_A = ρ_B`, or whose identity rows fail to separate them.
    pub injectivity_failure: Option<(u64, u64)>,
    /// First `(A, B)` (masks) with `ρ_Aρ_B ≠ ρ_{AB}`.
    pub homomorphism_failure: Option<(u64, u64)>,
}

impl EmbeddingVerdict {
    pub fn passed(&self) -> bool {
        self.all_hall && self.injective && self.homomorphism
    }
}

/// Checks the embedding `P(G) → H_n` exhaustively.
///
/// Injectivity is checked twice: all images must be distinct, and the row of
/// the identity in `ρ_A` must equal `A` (so some `(e, a)` with `a ∈ A∖B`
/// separates `ρ_A` from `ρ_B`). The homomorphism law is checked on every
/// ordered pair.
pub fn verify_hall_embedding(group: &FiniteGroup) -> Result<EmbeddingVerdict> {
    let images = hall_embedding(group)?;
    let e = group.identity();
    let s = group.semigroup();

    let all_hall = images.iter().enumerate().all(|(i, rho)| {
        let subset = GroupSubset::new(group, i as u64 + 1).expect("nonempty");
        rho.contains(&subset.translation_witness().to_relation())
            .unwrap_or(false)
            && rho.is_hall()
    });

    let mut seen: HashMap<&Relation, u64> = HashMap::new();
    let mut injectivity_failure = None;
    for (i, rho) in images.iter().enumerate() {
        let mask = i as u64 + 1;
        if let Some(&prev) = seen.get(rho) {
            injectivity_failure.get_or_insert((prev, mask));
        }
        seen.insert(rho, mask);
        if rho.rows()[e] != mask {
            injectivity_failure.get_or_insert((mask, mask));
        }
    }

    let mut homomorphism_failure = None;
    let mut pairs_checked = 0u64;
    'outer: for (i, ra) in images.iter().enumerate() {
        for (j, rb) in images.iter().enumerate() {
            pairs_checked += 1;
            let ab = subset_product(s, i as u64 + 1, j as u64 + 1);
            if ra.compose(rb)? != images[ab as usize - 1] {
                homomorphism_failure = Some((i as u64 + 1, j as u64 + 1));
                break 'outer;
            }
        }
    }

    Ok(EmbeddingVerdict {
        group_order: group.order(),
        subsets: images.len(),
        pairs_checked,
        all_hall,
        injective: injectivity_failure.is_none(),
        homomorphism: homomorphism_failure.is_none(),
        injectivity_failure,
        homomorphism_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};
    use crate::semigroup::is_block_group;

    #[test]
    fn power_of_z2() {
        let z2 = cyclic_group(2).unwrap();
        let p = power_semigroup(z2.semigroup()).unwrap();
        let s = &p.semigroup;
        assert_eq!(s.order(), 3);
        assert_eq!(s.labels(), &["{e}", "{a}", "{e;a}"]);
        // {a}{a} = {e}
        assert_eq!(s.mul(1, 1), 0);
        for x in 0..3 {
            assert_eq!(s.mul(2, x), 2);
            assert_eq!(s.mul(x, 2), 2);
        }
        assert_eq!(s.idempotents(), vec![0, 2]);
        assert_eq!(p.index_of(3), Some(2));
        assert_eq!(p.index_of(0), None);
    }

    #[test]
    fn power_semigroups_of_groups_are_block_groups() {
        for g in [2, 3, 4].map(|m| cyclic_group(m).unwrap()) {
            let p = power_semigroup(g.semigroup()).unwrap();
            assert!(is_block_group(&p.semigroup).is_block_group);
        }
        let s3 = symmetric_group(3).unwrap().group;
        let p = power_semigroup(s3.semigroup()).unwrap();
        assert_eq!(p.semigroup.order(), 63);
        assert!(is_block_group(&p.semigroup).is_block_group);
    }

    #[test]
    fn power_cap() {
        let g = cyclic_group(13).unwrap();
        assert!(matches!(power_semigroup(g.semigroup()), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn embedding_examples() {
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(hall_relation(&z2, 0b01).unwrap(), Relation::identity(2).unwrap());
        assert_eq!(
            hall_relation(&z2, 0b10).unwrap(),
            Permutation::from_images(vec![1, 0]).unwrap().to_relation()
        );
        assert_eq!(hall_relation(&z2, 0), Err(Error::EmptySubset));
        let z3 = cyclic_group(3).unwrap();
        let v = verify_hall_embedding(&z3).unwrap();
        assert!(v.passed(), "{v:?}");
        assert_eq!(v.subsets, 7);
        assert_eq!(v.pairs_checked, 49);
    }

    #[test]
    fn identity_subset_maps_to_delta() {
        for m in 1..=6 {
            let g = cyclic_group(m).unwrap();
            assert_eq!(
                hall_relation(&g, 1 << g.identity()).unwrap(),
                Relation::identity(m).unwrap()
            );
        }
    }

    #[test]
    fn subsets() {
        let z3 = cyclic_group(3).unwrap();
        let a = GroupSubset::from_elements(&z3, &[1]).unwrap();
        let b = GroupSubset::from_elements(&z3, &[1, 2]).unwrap();
        assert_eq!(a.product(&b).elements().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(a.product(&b).hall_relation(), a.hall_relation().compose(&b.hall_relation()).unwrap());
        assert!(GroupSubset::new(&z3, 0b1000).is_err());
        assert!(GroupSubset::from_elements(&z3, &[]).is_err());
    }
}
