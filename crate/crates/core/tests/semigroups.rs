use std::collections::BTreeSet;

use hallkit::catalog::{block_group_catalog, random_relation_semigroups, DEFAULT_SEED};
use hallkit::enumeration::{materialize_full, materialize_hall, materialize_reflexive};
use hallkit::group::{cyclic_group, power_semigroup, symmetric_group};
use hallkit::semigroup::{
    check_homomorphism, emit_cayley, find_division, is_block_group, is_j_trivial, j_classes,
    l_classes, parse_cayley, r_classes, DivisionBounds, IdempotentClash,
};
use hallkit::{Error, FiniteSemigroup, Relation};
use proptest::prelude::*;

/// Ideals computed from scratch: `x S¹`, `S¹ x`, `S¹ x S¹` as sorted sets.
struct NaiveIdeals {
    right: Vec<BTreeSet<usize>>,
    left: Vec<BTreeSet<usize>>,
    two_sided: Vec<BTreeSet<usize>>,
}

impl NaiveIdeals {
    fn new(s: &FiniteSemigroup) -> Self {
        let k = s.order();
        let right: Vec<BTreeSet<usize>> = (0..k)
            .map(|x| std::iter::once(x).chain((0..k).map(|y| s.mul(x, y))).collect())
            .collect();
        let left: Vec<BTreeSet<usize>> = (0..k)
            .map(|x| std::iter::once(x).chain((0..k).map(|y| s.mul(y, x))).collect())
            .collect();
        let two_sided = (0..k)
            .map(|x| {
                let mut set = right[x].clone();
                for &r in &right[x] {
                    set.extend((0..k).map(|y| s.mul(y, r)));
                }
                set
            })
            .collect();
        NaiveIdeals {
            right,
            left,
            two_sided,
        }
    }

    fn classes(ideals: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..ideals.len() {
            match out.iter_mut().find(|c| ideals[c[0]] == ideals[x]) {
                Some(c) => c.push(x),
                None => out.push(vec![x]),
            }
        }
        out
    }
}

fn naive_block_group(s: &FiniteSemigroup) -> bool {
    let ideals = NaiveIdeals::new(s);
    let idem = s.idempotents();
    idem.iter().all(|&e| {
        idem.iter().all(|&f| {
            e == f || (ideals.right[e] != ideals.right[f] && ideals.left[e] != ideals.left[f])
        })
    })
}

fn random_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    any::<u64>().prop_map(|seed| {
        random_relation_semigroups(seed, 1, 20)
            .unwrap()
            .pop()
            .unwrap()
            .semigroup
    })
}

fn semilattice() -> FiniteSemigroup {
    parse_cayley("1,0\n1,2\n2,2\n").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn green_classes_match_naive_ideals(s in random_semigroup()) {
        let ideals = NaiveIdeals::new(&s);
        prop_assert_eq!(r_classes(&s).unwrap(), NaiveIdeals::classes(&ideals.right));
        prop_assert_eq!(l_classes(&s).unwrap(), NaiveIdeals::classes(&ideals.left));
        prop_assert_eq!(j_classes(&s).unwrap(), NaiveIdeals::classes(&ideals.two_sided));
    }

    #[test]
    fn block_group_matches_definition(s in random_semigroup()) {
        prop_assert_eq!(is_block_group(&s).is_block_group, naive_block_group(&s));
    }

    #[test]
    fn block_group_iff_idempotent_part_j_trivial(s in random_semigroup()) {
        let bg = is_block_group(&s).is_block_group;
        prop_assert_eq!(bg, is_j_trivial(&s.idempotent_generated().semigroup).unwrap());
    }

    #[test]
    fn adjoining_identity_changes_nothing(s in random_semigroup()) {
        let m = s.adjoin_identity();
        prop_assert!(m.identity().is_some());
        prop_assert_eq!(is_block_group(&s).is_block_group, is_block_group(&m).is_block_group);
        prop_assert_eq!(
            is_j_trivial(&s.idempotent_generated().semigroup).unwrap(),
            is_j_trivial(&m.idempotent_generated().semigroup).unwrap()
        );
        prop_assert_eq!(is_j_trivial(&s).unwrap(), is_j_trivial(&m).unwrap());
    }

    #[test]
    fn cayley_round_trip(s in random_semigroup()) {
        let text = emit_cayley(&s).unwrap();
        let back = parse_cayley(&text).unwrap();
        prop_assert_eq!(back.labels(), s.labels());
        prop_assert_eq!(back.table(), s.table());
        prop_assert_eq!(back.identity(), s.identity());
    }

    #[test]
    fn closure_is_a_subsemigroup(s in random_semigroup(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let gens: Vec<usize> = picks.iter().map(|i| i.index(s.order())).collect();
        let sub = s.subsemigroup_closure(&gens).unwrap();
        // the inclusion is an injective homomorphism
        let check = check_homomorphism(&sub.embedding, &sub.semigroup, &s).unwrap();
        prop_assert!(check.is_homomorphism && check.injective);
        for g in gens {
            prop_assert!(sub.embedding.contains(&g));
        }
    }
}

#[test]
fn catalog_has_no_discrepancies() {
    let catalog = block_group_catalog(DEFAULT_SEED).unwrap();
    assert_eq!(catalog.len(), 6 + 1 + 6 + 100);
    for entry in catalog {
        let s = &entry.semigroup;
        assert!(s.order() <= 4095, "{}", entry.name);
        let bg = is_block_group(s).is_block_group;
        let generated = is_j_trivial(&s.idempotent_generated().semigroup).unwrap();
        assert_eq!(bg, generated, "{}", entry.name);
        if s.order() <= 64 {
            assert_eq!(bg, naive_block_group(s), "{}", entry.name);
        }
    }
}

#[test]
fn small_hall_monoid_classes() {
    let h2 = materialize_hall(2).unwrap();
    assert_eq!(h2.order(), 7);
    let mut sizes: Vec<usize> = j_classes(&h2.semigroup).unwrap().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 2, 4]);
    // the group of units is the J-class of size 2
    let classes = j_classes(&h2.semigroup).unwrap();
    let units = classes.iter().find(|c| c.len() == 2).unwrap();
    let labels: Vec<String> = units.iter().map(|&i| h2.relation(i).label()).collect();
    assert_eq!(labels, ["01/10", "10/01"]);

    assert!(is_block_group(&materialize_hall(3).unwrap().semigroup).is_block_group);
    for n in 1..=3 {
        assert!(is_j_trivial(&materialize_reflexive(n).unwrap().semigroup).unwrap());
    }
}

#[test]
fn full_relation_monoid_witness() {
    let b2 = materialize_full(2).unwrap();
    let check = is_block_group(&b2.semigroup);
    let (e, f, clash) = check.witness.unwrap();
    assert_eq!(*b2.relation(e), Relation::from_pairs(2, &[(0, 0)]).unwrap());
    assert_eq!(*b2.relation(f), Relation::from_pairs(2, &[(0, 0), (1, 0)]).unwrap());
    assert_eq!(clash, IdempotentClash::SameLClass);
    let (re, rf) = (b2.relation(e), b2.relation(f));
    assert_eq!(re.compose(rf).unwrap(), *re);
    assert_eq!(rf.compose(re).unwrap(), *rf);
    assert!(!is_j_trivial(&b2.semigroup.idempotent_generated().semigroup).unwrap());
}

#[test]
fn groups_are_groups() {
    for m in 1..=8 {
        let g = cyclic_group(m).unwrap();
        assert_eq!(g.order(), m);
        let e = g.identity();
        for x in 0..m {
            assert_eq!(g.mul(x, g.inverse(x)), e);
            assert_eq!(g.mul(g.inverse(x), x), e);
        }
        assert!(g.semigroup().is_commutative());
    }
    assert_eq!(cyclic_group(2).unwrap().inverse(1), 1);
    for (n, order) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
        let s = symmetric_group(n).unwrap();
        assert_eq!(s.group.order(), order);
        for (i, p) in s.permutations.iter().enumerate() {
            assert_eq!(s.index_of(p), Some(i));
            let inv = s.index_of(&p.inverse()).unwrap();
            assert_eq!(s.group.inverse(i), inv);
        }
        assert_eq!(s.group.semigroup().idempotents(), [s.group.identity()]);
    }
    assert!(!symmetric_group(3).unwrap().group.semigroup().is_commutative());
    assert!(cyclic_group(0).is_err());
}

#[test]
fn power_semigroups_of_groups() {
    let g = symmetric_group(3).unwrap().group;
    let p = power_semigroup(g.semigroup()).unwrap();
    assert_eq!(p.semigroup.order(), 63);
    assert!(is_block_group(&p.semigroup).is_block_group);
    // idempotents of P(G) are exactly the subgroups
    assert_eq!(p.semigroup.idempotents().len(), 6);
}

#[test]
fn division_examples() {
    let z2 = cyclic_group(2).unwrap().semigroup().clone();
    let r2 = materialize_reflexive(2).unwrap();
    let h2 = materialize_hall(2).unwrap();

    let none = find_division(&z2, &r2.semigroup, DivisionBounds::default()).unwrap();
    assert!(none.witness.is_none());
    assert!(none.subsemigroups_examined > 0);

    let found = find_division(&z2, &h2.semigroup, DivisionBounds::default()).unwrap();
    let w = found.witness.unwrap();
    let sub = h2.semigroup.subsemigroup_closure(&w.generators).unwrap();
    assert_eq!(sub.embedding, w.subsemigroup);
    let check = check_homomorphism(&w.map, &sub.semigroup, &z2).unwrap();
    assert!(check.is_homomorphism && check.surjective);

    let slat = semilattice();
    let w = find_division(&slat, &h2.semigroup, DivisionBounds::default())
        .unwrap()
        .witness
        .unwrap();
    let sub = h2.semigroup.subsemigroup_closure(&w.generators).unwrap();
    let check = check_homomorphism(&w.map, &sub.semigroup, &slat).unwrap();
    assert!(check.is_homomorphism && check.surjective);

    // every semigroup divides itself, the trivial one divides everything
    let trivial = cyclic_group(1).unwrap().semigroup().clone();
    for t in [&z2, &slat, &r2.semigroup, &h2.semigroup] {
        assert!(find_division(&trivial, t, DivisionBounds::default()).unwrap().witness.is_some());
    }
    assert!(find_division(&slat, &slat, DivisionBounds { max_generators: 2 })
        .unwrap()
        .witness
        .is_some());

    let big = materialize_hall(3).unwrap();
    assert!(matches!(
        find_division(&z2, &big.semigroup, DivisionBounds::default()),
        Err(Error::CapExceeded { .. })
    ));
    assert!(find_division(&z2, &h2.semigroup, DivisionBounds { max_generators: 0 }).is_err());
}

#[test]
fn invalid_tables() {
    let err = parse_cayley("a,b\n2,1\n1,1\n").unwrap_err();
    assert!(matches!(err, Error::NonAssociative { .. }), "{err}");
    assert!(matches!(parse_cayley("a,a\n1,1\n1,1\n"), Err(Error::DuplicateLabel(_))));
    assert!(parse_cayley("a,b\n1,3\n1,1\n").is_err());
    assert!(parse_cayley("a,b\n1,2\n").is_err());
    assert!(parse_cayley("a,b\n1,2\n2,1\nidentity=b\n").is_err());
    assert_eq!(parse_cayley("a,b\n1,2\n2,1\nidentity=a\n").unwrap().identity(), Some(0));
}
