//! Fixed collections of groups and semigroups used for cross-checks.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumeration::{materialize_full, materialize_hall, materialize_reflexive};
use crate::error::Result;
use crate::group::{cyclic_group, power_semigroup, symmetric_group, FiniteGroup};
use crate::relation::Relation;
use crate::semigroup::{semigroup_of_relations, FiniteSemigroup, RelationSemigroup};

/// Seed for the random part of the catalog.
pub const DEFAULT_SEED: u64 = 0x4841_4c4c;
pub const RANDOM_SEMIGROUPS: usize = 100;
pub const RANDOM_MAX_ORDER: usize = 20;

/// `cyclic:2` … `cyclic:6` and `symmetric:3`.
pub fn catalog_groups() -> Result<Vec<(String, FiniteGroup)>> {
    let mut groups = Vec::new();
    for m in 2..=6 {
        groups.push((format!("cyclic:{m}"), cyclic_group(m)?));
    }
    groups.push(("symmetric:3".to_string(), symmetric_group(3)?.group));
    Ok(groups)
}

/// Catalog groups of order `n`, plus `cyclic:1` for `n = 1`.
pub fn groups_of_order(n: usize) -> Result<Vec<(String, FiniteGroup)>> {
    let mut groups = Vec::new();
    if n == 1 {
        groups.push(("cyclic:1".to_string(), cyclic_group(1)?));
    }
    groups.extend(catalog_groups()?.into_iter().filter(|(_, g)| g.order() == n));
    Ok(groups)
}

fn relation_closure(generators: &[Relation], max_order: usize) -> Option<Vec<Relation>> {
    let mut seen: HashSet<Relation> = HashSet::new();
    let mut elems: Vec<Relation> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            elems.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elems.len() {
        for j in 0..=i {
            for p in [
                elems[i].compose(&elems[j]).ok()?,
                elems[j].compose(&elems[i]).ok()?,
            ] {
                if seen.insert(p.clone()) {
                    if elems.len() == max_order {
                        return None;
                    }
                    elems.push(p);
                }
            }
        }
        i += 1;
    }
    elems.sort_by_key(|r| r.code());
    Some(elems)
}

/// Seeded semigroups generated by 1–3 random relations on 1–4 points,
/// kept when the closure has at most `max_order` elements.
pub fn random_relation_semigroups(
    seed: u64,
    count: usize,
    max_order: usize,
) -> Result<Vec<RelationSemigroup>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let dim = rng.gen_range(1..=4);
        let generators: usize = rng.gen_range(1..=3);
        // each pair present with probability density/8
        let density = rng.gen_range(1..=5);
        let gens: Vec<Relation> = (0..generators)
            .map(|_| {
                let mut r = Relation::empty(dim)?;
                for i in 0..dim {
                    for j in 0..dim {
                        if rng.gen_range(0..8) < density {
                            r.insert(i, j)?;
                        }
                    }
                }
                Ok(r)
            })
            .collect::<Result<_>>()?;
        if let Some(elements) = relation_closure(&gens, max_order) {
            out.push(semigroup_of_relations(elements)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub semigroup: FiniteSemigroup,
}

/// Semigroups on which the block-group / idempotent-generated equivalence
/// is cross-checked: `R_n` and `H_n` for `n ≤ 3`, the full relation monoid
/// on 2 points, `P(G)` for the catalog groups, and the seeded random
/// relation semigroups.
pub fn block_group_catalog(seed: u64) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    for n in 1..=3 {
        entries.push(CatalogEntry {
            name: format!("R_{n}"),
            semigroup: materialize_reflexive(n)?.semigroup,
        });
        entries.push(CatalogEntry {
            name: format!("H_{n}"),
            semigroup: materialize_hall(n)?.semigroup,
        });
    }
    entries.push(CatalogEntry {
        name: "B_2".into(),
        semigroup: materialize_full(2)?.semigroup,
    });
    for (name, g) in catalog_groups()? {
        entries.push(CatalogEntry {
            name: format!("P({name})"),
            semigroup: power_semigroup(g.semigroup())?.semigroup,
        });
    }
    for (i, rs) in random_relation_semigroups(seed, RANDOM_SEMIGROUPS, RANDOM_MAX_ORDER)?
        .into_iter()
        .enumerate()
    {
        entries.push(CatalogEntry {
            name: format!("random#{i}"),
            semigroup: rs.semigroup,
        });
    }
    Ok(entries)
}
