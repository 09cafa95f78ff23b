use hallkit::enumeration::{
    count_hall, count_hall_inclusion_exclusion, count_hall_transfer, hall_idempotent_census,
    materialize_full, materialize_hall, materialize_reflexive, reflexive_relations,
};
use hallkit::relation::permanent_count;
use hallkit::Relation;

/// Hall count through the integer permanent, one matrix at a time.
fn permanent_oracle(n: usize) -> u64 {
    (0u64..1 << (n * n))
        .filter(|&code| permanent_count(&Relation::from_code(n, code).unwrap()).unwrap() > 0)
        .count() as u64
}

#[test]
fn small_counts_agree_with_every_method() {
    for (n, expected) in [(1, 1), (2, 7), (3, 247)] {
        assert_eq!(permanent_oracle(n), expected);
        assert_eq!(count_hall(n, 1).unwrap().total_hall(), expected);
        assert_eq!(count_hall_inclusion_exclusion(n).unwrap(), expected);
        assert_eq!(count_hall_transfer(n).unwrap(), expected);
    }
}

#[test]
fn four_points() {
    let streamed = count_hall(4, 2).unwrap();
    let ie = count_hall_inclusion_exclusion(4).unwrap();
    assert_eq!(streamed.total_hall(), ie);
    assert_eq!(count_hall_transfer(4).unwrap(), ie);
    assert_eq!(permanent_oracle(4), ie);
    assert_eq!(streamed.total_reflexive(), 4096);
}

#[test]
fn worker_count_does_not_change_counts() {
    let base = count_hall(4, 1).unwrap();
    for w in [2, 3, 8, 64] {
        let r = count_hall(4, w).unwrap();
        assert_eq!(r.counts, base.counts, "workers = {w}");
        assert_eq!(r.worker_count, w);
    }
    assert!(count_hall(3, 0).is_err());
    assert!(count_hall(0, 1).is_err());
    assert!(count_hall(6, 1).is_err());
}

#[test]
fn idempotent_census() {
    // idempotent reflexive relations are the preorders
    for (n, preorders) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let c = hall_idempotent_census(n).unwrap();
        assert_eq!(c.count, preorders);
        assert_eq!(c.hall_idempotents, preorders);
        assert!(c.all_reflexive && c.counterexample.is_none());
    }
    assert!(hall_idempotent_census(5).is_err());
}

#[test]
fn reflexive_enumeration() {
    for n in 1..=4 {
        let all: Vec<Relation> = reflexive_relations(n).collect();
        assert_eq!(all.len(), 1 << (n * (n - 1)));
        assert!(all.iter().all(Relation::is_reflexive));
        assert!(all.windows(2).all(|w| w[0].code() < w[1].code()));
    }
}

#[test]
fn materialized_monoids() {
    for (n, hall, reflexive, full) in [(1, 1, 1, 2), (2, 7, 4, 16), (3, 247, 64, 512)] {
        let h = materialize_hall(n).unwrap();
        assert_eq!(h.order(), hall);
        assert!(h.elements().iter().all(Relation::is_hall));
        assert_eq!(materialize_reflexive(n).unwrap().order(), reflexive);
        assert_eq!(materialize_full(n).unwrap().order(), full);
        // identity of the monoid is the diagonal
        let id = h.semigroup.identity().unwrap();
        assert_eq!(*h.relation(id), Relation::identity(n).unwrap());
    }
    assert!(materialize_hall(4).is_err());
}
