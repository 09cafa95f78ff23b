//! Group actions, semidirect products `M ⋊ G`, and the projection of
//! `R_n ⋊ S_n` onto the Hall monoid `H_n`.

use super::{symmetric_group, FiniteGroup, SymmetricGroup};
use crate::enumeration::{materialize_hall, materialize_reflexive};
use crate::error::{Error, Result};
use crate::relation::{Permutation, Relation};
use crate::semigroup::{
    check_homomorphism, FiniteSemigroup, HomomorphismCheck, RelationSemigroup, MAX_ORDER,
};

/// A left action of a group on a semigroup by automorphisms, stored
/// extensionally: `maps[g][m]` is `g·m`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: FiniteGroup,
    target: FiniteSemigroup,
    maps: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Validates that every map is an automorphism of `target` and that
    /// `maps[g·h] = maps[g] ∘ maps[h]`.
    pub fn new(group: FiniteGroup, target: FiniteSemigroup, maps: Vec<Vec<usize>>) -> Result<Self> {
        let k = target.order();
        if maps.len() != group.order() {
            return Err(Error::InvalidAction(format!(
                "{} maps for a group of order {}",
                maps.len(),
                group.order()
            )));
        }
        for (g, map) in maps.iter().enumerate() {
            let glabel = group.label(g);
            if map.len() != k {
                return Err(Error::InvalidAction(format!(
                    "map of {glabel:?} has {} entries, expected {k}",
                    map.len()
                )));
            }
            let mut hit = vec![false; k];
            for &m in map {
                if m >= k || std::mem::replace(&mut hit[m], true) {
                    return Err(Error::InvalidAction(format!(
                        "map of {glabel:?} is not a permutation of the target"
                    )));
                }
            }
            for x in 0..k {
                for y in 0..k {
                    if map[target.mul(x, y)] != target.mul(map[x], map[y]) {
                        return Err(Error::InvalidAction(format!(
                            "{glabel:?} does not preserve {:?}*{:?}",
                            target.label(x),
                            target.label(y)
                        )));
                    }
                }
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                if (0..k).any(|m| maps[gh][m] != maps[g][maps[h][m]]) {
                    return Err(Error::InvalidAction(format!(
                        "action of {:?} is not action of {:?} after {:?}",
                        group.label(gh),
                        group.label(g),
                        group.label(h)
                    )));
                }
            }
        }
        Ok(GroupAction {
            group,
            target,
            maps,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn target(&self) -> &FiniteSemigroup {
        &self.target
    }

    #[inline]
    pub fn act(&self, g: usize, m: usize) -> usize {
        self.maps[g][m]
    }
}

/// `S_n` acting on the materialized `R_n` by `ρ ↦ πρπ⁻¹`.
#[derive(Debug, Clone)]
pub struct ConjugationAction {
    pub action: GroupAction,
    pub reflexive: RelationSemigroup,
    pub symmetric: SymmetricGroup,
}

pub fn conjugation_action(n: usize) -> Result<ConjugationAction> {
    let reflexive = materialize_reflexive(n)?;
    let symmetric = symmetric_group(n)?;
    let mut maps = Vec::with_capacity(symmetric.permutations.len());
    for p in &symmetric.permutations {
        let map = reflexive
            .elements()
            .iter()
            .map(|r| {
                let c = r.conjugate(p)?;
                reflexive.index_of(&c).ok_or_else(|| {
                    Error::InvalidAction(format!("conjugate of {r} by {p} is not reflexive"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(map);
    }
    let action = GroupAction::new(
        symmetric.group.clone(),
        reflexive.semigroup.clone(),
        maps,
    )?;
    Ok(ConjugationAction {
        action,
        reflexive,
        symmetric,
    })
}

/// `M ⋊ G`; element `m·|G| + g` is the pair `(m, g)`.
#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    pub semigroup: FiniteSemigroup,
    pub group_order: usize,
}

impl SemidirectProduct {
    pub fn pair(&self, index: usize) -> (usize, usize) {
        (index / self.group_order, index % self.group_order)
    }

    pub fn index(&self, m: usize, g: usize) -> usize {
        m * self.group_order + g
    }
}

/// `(m, g)(m', g') = (m·(g·m'), gg')`, validated associative.
pub fn semidirect_product(
    monoid: &FiniteSemigroup,
    group: &FiniteGroup,
    action: &GroupAction,
) -> Result<SemidirectProduct> {
    if action.group() != group || action.target() != monoid {
        return Err(Error::InvalidAction(
            "action does not act by this group on this monoid".into(),
        ));
    }
    let (km, kg) = (monoid.order(), group.order());
    if km * kg > MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "semidirect product order",
            value: km * kg,
            limit: MAX_ORDER,
        });
    }
    let labels = (0..km * kg)
        .map(|i| format!("({};{})", monoid.label(i / kg), group.label(i % kg)))
        .collect();
    let semigroup = FiniteSemigroup::from_fn(labels, |x, y| {
        let (m, g) = (x / kg, x % kg);
        let (m2, g2) = (y / kg, y % kg);
        monoid.mul(m, action.act(g, m2)) * kg + group.mul(g, g2)
    })?;
    Ok(SemidirectProduct {
        semigroup,
        group_order: kg,
    })
}

/// `(ρ, π) ↦ ρπ`; defined on reflexive `ρ` only.
pub fn project_to_hall(rho: &Relation, pi: &Permutation) -> Result<Relation> {
    if !rho.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    rho.compose(&pi.to_relation())
}

/// `σ ↦ (στ⁻¹, τ)` for a given permutation `τ ⊆ σ`.
pub fn factor_through(sigma: &Relation, tau: &Permutation) -> Result<Relation> {
    let t = tau.to_relation();
    if !sigma.contains(&t)? {
        return Err(Error::InvalidArgument(format!(
            "{tau} is not contained in {sigma}"
        )));
    }
    sigma.compose(&tau.inverse().to_relation())
}

/// `σ ↦ (στ⁻¹, τ)` with `τ` the lexicographically least permutation in `σ`.
pub fn hall_factorization(sigma: &Relation) -> Result<(Relation, Permutation)> {
    let tau = sigma.hall_witness().ok_or(Error::NotHall)?;
    let rho = factor_through(sigma, &tau)?;
    Ok((rho, tau))
}

/// `R_n ⋊ S_n` under conjugation, with the pieces needed to interpret it.
#[derive(Debug, Clone)]
pub struct HallSemidirect {
    pub product: SemidirectProduct,
    pub conjugation: ConjugationAction,
}

impl HallSemidirect {
    pub fn pair(&self, index: usize) -> (&Relation, &Permutation) {
        let (m, g) = self.product.pair(index);
        (
            self.conjugation.reflexive.relation(m),
            &self.conjugation.symmetric.permutations[g],
        )
    }
}

pub fn hall_semidirect(n: usize) -> Result<HallSemidirect> {
    let conjugation = conjugation_action(n)?;
    let product = semidirect_product(
        &conjugation.reflexive.semigroup,
        &conjugation.symmetric.group,
        &conjugation.action,
    )?;
    Ok(HallSemidirect {
        product,
        conjugation,
    })
}

#[derive(Debug, Clone)]
pub struct SurjectionVerdict {
    pub n: usize,
    pub domain_order: usize,
    pub codomain_order: usize,
    pub check: HomomorphismCheck,
    /// `project_to_hall(hall_factorization(σ)) = σ` for every `σ ∈ H_n`.
    pub factorization_round_trips: bool,
    /// First `σ` whose factorization fails, if any.
    pub factorization_failure: Option<Relation>,
}

impl SurjectionVerdict {
    pub fn passed(&self) -> bool {
        self.check.is_homomorphism && self.check.surjective && self.factorization_round_trips
    }
}

/// Checks that `(ρ, π) ↦ ρπ` is a surjective homomorphism `R_n ⋊ S_n → H_n`.
pub fn verify_hall_surjection(n: usize) -> Result<SurjectionVerdict> {
    let sd = hall_semidirect(n)?;
    let hall = materialize_hall(n)?;
    let domain = &sd.product.semigroup;
    let map = (0..domain.order())
        .map(|i| {
            let (rho, pi) = sd.pair(i);
            let image = project_to_hall(rho, pi)?;
            hall.index_of(&image).ok_or(Error::NotHall)
        })
        .collect::<Result<Vec<_>>>()?;
    let check = check_homomorphism(&map, domain, &hall.semigroup)?;

    let factorization_failure = hall
        .elements()
        .iter()
        .find(|sigma| match hall_factorization(sigma) {
            Ok((rho, tau)) => {
                !rho.is_reflexive() || project_to_hall(&rho, &tau).ok().as_ref() != Some(*sigma)
            }
            Err(_) => true,
        })
        .cloned();

    Ok(SurjectionVerdict {
        n,
        domain_order: domain.order(),
        codomain_order: hall.order(),
        check,
        factorization_round_trips: factorization_failure.is_none(),
        factorization_failure,
    })
}
