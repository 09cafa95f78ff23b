//! Homomorphism checks and a bounded search for divisions `S ≺ T`.

use std::collections::HashSet;

use itertools::Itertools;

use super::FiniteSemigroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismCheck {
    pub is_homomorphism: bool,
    pub injective: bool,
    pub surjective: bool,
    /// First pair `(x, y)` with `map(xy) ≠ map(x)map(y)`.
    pub violation: Option<(usize, usize)>,
}

/// Checks `map(x·y) = map(x)·map(y)` for all pairs of `source`.
pub fn check_homomorphism(
    map: &[usize],
    source: &FiniteSemigroup,
    target: &FiniteSemigroup,
) -> Result<HomomorphismCheck> {
    if map.len() != source.order() {
        return Err(Error::InvalidArgument(format!(
            "map has {} entries for a source of order {}",
            map.len(),
            source.order()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&m| m >= target.order()) {
        return Err(Error::OutOfRange {
            index: bad,
            order: target.order(),
        });
    }
    let k = source.order();
    let violation = (0..k)
        .cartesian_product(0..k)
        .find(|&(x, y)| map[source.mul(x, y)] != target.mul(map[x], map[y]));
    let image: HashSet<usize> = map.iter().copied().collect();
    Ok(HomomorphismCheck {
        is_homomorphism: violation.is_none(),
        injective: image.len() == k,
        surjective: image.len() == target.order(),
        violation,
    })
}

/// Hard limit on the target order of a division search.
pub const DIVISION_MAX_TARGET: usize = 12;
/// Hard limit on the size of generator sets tried.
pub const DIVISION_MAX_GENERATORS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionBounds {
    pub max_generators: usize,
}

impl Default for DivisionBounds {
    fn default() -> Self {
        DivisionBounds {
            max_generators: DIVISION_MAX_GENERATORS,
        }
    }
}

/// `quotient` is a homomorphic image of the subsemigroup of `T` generated by `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionWitness {
    /// Generators, as indices of `T`.
    pub generators: Vec<usize>,
    /// Elements of the subsemigroup `U`, as ascending indices of `T`.
    pub subsemigroup: Vec<usize>,
    /// `map[i]` is the image in `S` of `subsemigroup[i]`.
    pub map: Vec<usize>,
}

/// Outcome of [`find_division`]. `witness == None` only means nothing was
/// found among the generator sets tried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionSearch {
    pub witness: Option<DivisionWitness>,
    pub bounds: DivisionBounds,
    pub subsemigroups_examined: usize,
}

/// Searches for `S` as a homomorphic image of a subsemigroup of `T`.
///
/// Generator sets of `T` are tried by size, then lexicographically; each
/// distinct closure `U` with `|U| ≥ |S|` is tried against every assignment of
/// generator images (in index order). A homomorphism out of `U` is fixed by
/// the generator images, so each assignment is propagated over `U` and then
/// verified.
pub fn find_division(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    bounds: DivisionBounds,
) -> Result<DivisionSearch> {
    if t.order() > DIVISION_MAX_TARGET {
        return Err(Error::CapExceeded {
            what: "division target order",
            value: t.order(),
            limit: DIVISION_MAX_TARGET,
        });
    }
    if bounds.max_generators == 0 || bounds.max_generators > DIVISION_MAX_GENERATORS {
        return Err(Error::CapExceeded {
            what: "division generator count",
            value: bounds.max_generators,
            limit: DIVISION_MAX_GENERATORS,
        });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut examined = 0;
    for size in 1..=bounds.max_generators.min(t.order()) {
        for gens in (0..t.order()).combinations(size) {
            let sub = t.subsemigroup_closure(&gens)?;
            if !seen.insert(sub.embedding.clone()) {
                continue;
            }
            examined += 1;
            if sub.semigroup.order() < s.order() {
                continue;
            }
            let local_gens: Vec<usize> = gens
                .iter()
                .map(|g| sub.embedding.binary_search(g).expect("generator in closure"))
                .collect();
            if let Some(map) = surjection_from_generators(&sub.semigroup, &local_gens, s) {
                return Ok(DivisionSearch {
                    witness: Some(DivisionWitness {
                        generators: gens,
                        subsemigroup: sub.embedding,
                        map,
                    }),
                    bounds,
                    subsemigroups_examined: examined,
                });
            }
        }
    }
    Ok(DivisionSearch {
        witness: None,
        bounds,
        subsemigroups_examined: examined,
    })
}

fn surjection_from_generators(
    u: &FiniteSemigroup,
    gens: &[usize],
    s: &FiniteSemigroup,
) -> Option<Vec<usize>> {
    let images = std::iter::repeat(0..s.order())
        .take(gens.len())
        .multi_cartesian_product();
    for assignment in images {
        let Some(map) = propagate(u, gens, &assignment, s) else {
            continue;
        };
        let check = check_homomorphism(&map, u, s).ok()?;
        if check.is_homomorphism && check.surjective {
            return Some(map);
        }
    }
    None
}

/// Extends generator images multiplicatively; `None` on an inconsistency.
fn propagate(
    u: &FiniteSemigroup,
    gens: &[usize],
    images: &[usize],
    s: &FiniteSemigroup,
) -> Option<Vec<usize>> {
    let mut map: Vec<Option<usize>> = vec![None; u.order()];
    let mut known = Vec::new();
    for (&g, &img) in gens.iter().zip(images) {
        match map[g] {
            Some(prev) if prev != img => return None,
            Some(_) => {}
            None => {
                map[g] = Some(img);
                known.push(g);
            }
        }
    }
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        for j in 0..=i {
            let y = known[j];
            for (a, b) in [(x, y), (y, x)] {
                let p = u.mul(a, b);
                let img = s.mul(map[a]?, map[b]?);
                match map[p] {
                    Some(prev) if prev != img => return None,
                    Some(_) => {}
                    None => {
                        map[p] = Some(img);
                        known.push(p);
                    }
                }
            }
        }
        i += 1;
    }
    map.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::labels;
    use crate::semigroup::tests::z2;

    #[test]
    fn identity_map_is_bijective_homomorphism() {
        let g = z2();
        let c = check_homomorphism(&[0, 1], &g, &g).unwrap();
        assert!(c.is_homomorphism && c.injective && c.surjective);
    }

    #[test]
    fn constant_to_non_idempotent_fails() {
        let g = z2();
        let c = check_homomorphism(&[1, 1], &g, &g).unwrap();
        assert!(!c.is_homomorphism);
        assert_eq!(c.violation, Some((0, 0)));
    }

    #[test]
    fn bad_maps_are_errors() {
        let g = z2();
        assert!(matches!(
            check_homomorphism(&[0, 2], &g, &g),
            Err(Error::OutOfRange { index: 2, order: 2 })
        ));
        assert!(check_homomorphism(&[0], &g, &g).is_err());
    }

    #[test]
    fn trivial_divides_everything() {
        let triv = FiniteSemigroup::new(labels(["1"]), vec![vec![0]]).unwrap();
        let g = z2();
        let found = find_division(&triv, &g, DivisionBounds::default()).unwrap();
        let w = found.witness.unwrap();
        assert_eq!(w.generators, vec![0]);
        assert_eq!(w.map, vec![0]);
    }

    #[test]
    fn group_divides_itself() {
        let g = z2();
        let w = find_division(&g, &g, DivisionBounds::default())
            .unwrap()
            .witness
            .unwrap();
        assert_eq!(w.subsemigroup, vec![0, 1]);
        assert_eq!(w.map, vec![0, 1]);
    }

    #[test]
    fn bounds_are_enforced() {
        let g = z2();
        assert!(find_division(&g, &g, DivisionBounds { max_generators: 0 }).is_err());
        assert!(find_division(&g, &g, DivisionBounds { max_generators: 4 }).is_err());
        let big = FiniteSemigroup::from_fn(labels((0..13).map(|i| i.to_string())), |x, _| x)
            .unwrap();
        assert!(matches!(
            find_division(&g, &big, DivisionBounds::default()),
            Err(Error::CapExceeded { .. })
        ));
    }
}
