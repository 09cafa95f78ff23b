//! Finite groups and the constructions that relate them to Hall relations.

mod power;
mod semidirect;

use crate::error::{Error, Result};
use crate::relation::Permutation;
use crate::semigroup::{FiniteSemigroup, MAX_ORDER};

pub use power::{
    hall_embedding, hall_relation, power_semigroup, subset_product, verify_hall_embedding,
    EmbeddingVerdict, GroupSubset, PowerSemigroup, POWER_SEMIGROUP_MAX_BASE,
};
pub use semidirect::{
    conjugation_action, factor_through, hall_factorization, hall_semidirect, project_to_hall,
    semidirect_product, verify_hall_surjection, ConjugationAction, GroupAction, HallSemidirect,
    SemidirectProduct, SurjectionVerdict,
};

/// A group given by its Cayley table and inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    base: FiniteSemigroup,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks that the semigroup has an identity and that every element is invertible.
    pub fn from_semigroup(base: FiniteSemigroup) -> Result<Self> {
        let e = base
            .identity()
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let k = base.order();
        let mut inverse = Vec::with_capacity(k);
        for g in 0..k {
            let inv = (0..k)
                .find(|&h| base.mul(g, h) == e && base.mul(h, g) == e)
                .ok_or_else(|| {
                    Error::NotAGroup(format!("element {:?} has no inverse", base.label(g)))
                })?;
            inverse.push(inv);
        }
        Ok(FiniteGroup { base, inverse })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn identity(&self) -> usize {
        self.base.identity().expect("groups have an identity")
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.base.mul(g, h)
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn label(&self, g: usize) -> &str {
        self.base.label(g)
    }
}

/// `Z_m` with elements `e, a, a^2, …` and `a^i·a^j = a^{(i+j) mod m}`.
pub fn cyclic_group(m: usize) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidArgument("cyclic group order must be positive".into()));
    }
    if m > MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "cyclic group order",
            value: m,
            limit: MAX_ORDER,
        });
    }
    let labels = (0..m)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect();
    FiniteGroup::from_semigroup(FiniteSemigroup::from_fn(labels, |x, y| (x + y) % m)?)
}

/// Largest degree for which `S_n` is tabulated (`n! ≤` the table cap).
pub const SYMMETRIC_MAX_DEGREE: usize = 6;

/// `S_n` together with the permutation behind each table index.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    pub group: FiniteGroup,
    /// Index `i` of the table is `permutations[i]`; lexicographic by image array.
    pub permutations: Vec<Permutation>,
}

impl SymmetricGroup {
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.permutations.binary_search(p).ok()
    }
}

/// `S_n` with the product of [`Permutation::then`] (left factor applied first).
pub fn symmetric_group(n: usize) -> Result<SymmetricGroup> {
    if n == 0 || n > SYMMETRIC_MAX_DEGREE {
        return Err(Error::CapExceeded {
            what: "symmetric group degree",
            value: n,
            limit: SYMMETRIC_MAX_DEGREE,
        });
    }
    let permutations = Permutation::all(n)?;
    let labels = permutations
        .iter()
        .map(|p| p.one_based().iter().map(|x| x.to_string()).collect())
        .collect();
    let index = |p: &Permutation| permutations.binary_search(p).expect("closed under product");
    let base = FiniteSemigroup::from_fn(labels, |x, y| {
        index(&permutations[x].then(&permutations[y]).expect("same degree"))
    })?;
    Ok(SymmetricGroup {
        group: FiniteGroup::from_semigroup(base)?,
        permutations,
    })
}
