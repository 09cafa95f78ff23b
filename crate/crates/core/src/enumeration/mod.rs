//! Exhaustive enumeration over small Boolean matrices.
//!
//! Matrices of dimension `n ≤ 5` are encoded as `n²`-bit integers, row `i`
//! in bits `i*n .. i*n + n` (the same code as [`Relation::code`]).

mod campaign;
mod oracle;

use std::thread;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::relation::{compose_rows, matching, row_mask, Relation};
use crate::semigroup::{semigroup_of_relations, RelationSemigroup};

pub use campaign::{verification_campaign, CampaignReport, CheckOutcome};
pub use oracle::{count_hall_inclusion_exclusion, count_hall_transfer, ORACLE_MAX_DIM};

/// Largest `n` for streamed counting (`2^25` matrices).
pub const COUNT_MAX_DIM: usize = 5;
/// Largest `n` for the idempotent census.
pub const CENSUS_MAX_DIM: usize = 4;
/// Largest `n` for materialized monoids.
pub const MATERIALIZE_MAX_DIM: usize = 3;

fn check_range(n: usize, limit: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    if n > limit {
        return Err(Error::CapExceeded {
            what,
            value: n,
            limit,
        });
    }
    Ok(())
}

/// Counts gathered by one pass over all `n × n` matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HallCounts {
    pub total_hall: u64,
    pub total_reflexive: u64,
    pub idempotent_hall: u64,
    /// Least code of a Hall idempotent that is not reflexive, if any.
    pub non_reflexive_idempotent: Option<u64>,
}

impl HallCounts {
    fn merge(self, other: HallCounts) -> HallCounts {
        HallCounts {
            total_hall: self.total_hall + other.total_hall,
            total_reflexive: self.total_reflexive + other.total_reflexive,
            idempotent_hall: self.idempotent_hall + other.idempotent_hall,
            non_reflexive_idempotent: match (self.non_reflexive_idempotent, other.non_reflexive_idempotent) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: usize,
    pub counts: HallCounts,
    pub worker_count: usize,
    pub elapsed: Duration,
}

impl EnumerationReport {
    pub fn total_hall(&self) -> u64 {
        self.counts.total_hall
    }

    pub fn total_reflexive(&self) -> u64 {
        self.counts.total_reflexive
    }

    pub fn idempotents_all_reflexive(&self) -> bool {
        self.counts.non_reflexive_idempotent.is_none()
    }
}

/// Cheap rejections before running a matching.
#[inline]
fn fails_filters(rows: &[u64], full: u64) -> bool {
    let mut cols = 0u64;
    let mut forced = 0u64;
    for &r in rows {
        if r == 0 {
            return true;
        }
        // two rows with the same single entry compete for one column
        if r & (r - 1) == 0 {
            if forced & r != 0 {
                return true;
            }
            forced |= r;
        }
        cols |= r;
    }
    cols != full
}

/// Scans every matrix whose first row is `first_row`.
fn scan_partition(n: usize, first_row: u64) -> HallCounts {
    let full = row_mask(n);
    let diag: u64 = (0..n).map(|i| 1u64 << (i * n + i)).sum();
    let mut counts = HallCounts::default();
    let mut rows = [0u64; COUNT_MAX_DIM];
    let mut square = [0u64; COUNT_MAX_DIM];
    rows[0] = first_row;
    let rest_bits = n * (n - 1);
    for rest in 0u64..(1 << rest_bits) {
        let code = first_row | rest << n;
        if code & diag == diag {
            counts.total_reflexive += 1;
        }
        for (i, row) in rows.iter_mut().enumerate().take(n).skip(1) {
            *row = (rest >> ((i - 1) * n)) & full;
        }
        let rows = &rows[..n];
        if fails_filters(rows, full) || !matching::has_perfect_matching(rows, n) {
            continue;
        }
        counts.total_hall += 1;
        compose_rows(rows, rows, &mut square[..n]);
        if square[..n] == *rows {
            counts.idempotent_hall += 1;
            if code & diag != diag && counts.non_reflexive_idempotent.is_none() {
                counts.non_reflexive_idempotent = Some(code);
            }
        }
    }
    counts
}

/// Streams all `2^(n²)` matrices, counting Hall relations, reflexive
/// relations and Hall idempotents.
///
/// Work is split by the value of the first row; worker `w` takes the
/// first-row values congruent to `w` modulo the worker count. Partial counts
/// are summed, so the result does not depend on `workers`.
pub fn count_hall(n: usize, workers: usize) -> Result<EnumerationReport> {
    check_range(n, COUNT_MAX_DIM, "count_hall dimension")?;
    if workers == 0 {
        return Err(Error::InvalidArgument("worker count must be positive".into()));
    }
    let start = Instant::now();
    let first_rows = 1u64 << n;
    let worker_count = workers.min(first_rows as usize);
    let mut counts = HallCounts::default();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..worker_count)
            .map(|w| {
                scope.spawn(move || {
                    (w as u64..first_rows)
                        .step_by(worker_count)
                        .map(|r0| scan_partition(n, r0))
                        .fold(HallCounts::default(), HallCounts::merge)
                })
            })
            .collect();
        for h in handles {
            counts = counts.merge(h.join().expect("enumeration worker panicked"));
        }
    });
    Ok(EnumerationReport {
        n,
        counts,
        worker_count: workers,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentCensus {
    pub n: usize,
    /// Reflexive `ρ` with `ρ² = ρ`.
    pub count: u64,
    /// Hall idempotents found by a scan over all matrices.
    pub hall_idempotents: u64,
    pub all_reflexive: bool,
    pub counterexample: Option<Relation>,
}

/// Idempotents of `H_n`.
///
/// Counted over reflexive matrices only, then confirmed by a scan over all
/// matrices that every Hall idempotent is reflexive.
pub fn hall_idempotent_census(n: usize) -> Result<IdempotentCensus> {
    check_range(n, CENSUS_MAX_DIM, "idempotent census dimension")?;
    let mut count = 0;
    for r in reflexive_relations(n) {
        if r.is_idempotent() {
            count += 1;
        }
    }
    let full = count_hall(n, 1)?.counts;
    let counterexample = full
        .non_reflexive_idempotent
        .map(|code| Relation::from_code(n, code))
        .transpose()?;
    Ok(IdempotentCensus {
        n,
        count,
        hall_idempotents: full.idempotent_hall,
        all_reflexive: counterexample.is_none() && full.idempotent_hall == count,
        counterexample,
    })
}

/// All reflexive relations on `n ≤ 5` points in ascending code order.
pub fn reflexive_relations(n: usize) -> impl Iterator<Item = Relation> {
    let diag: u64 = (0..n).map(|i| 1u64 << (i * n + i)).sum();
    let off: Vec<u32> = (0..(n * n) as u32)
        .filter(|b| diag >> b & 1 == 0)
        .collect();
    (0u64..1 << off.len()).map(move |free| {
        let code = off
            .iter()
            .enumerate()
            .filter(|(i, _)| free >> i & 1 == 1)
            .fold(diag, |acc, (_, &b)| acc | 1 << b);
        Relation::from_code(n, code).expect("code fits dimension")
    })
}

fn materialize(n: usize, keep: impl Fn(&Relation) -> bool) -> Result<RelationSemigroup> {
    check_range(n, MATERIALIZE_MAX_DIM, "materialized monoid dimension")?;
    let elements = (0..1u64 << (n * n))
        .map(|code| Relation::from_code(n, code).expect("code fits dimension"))
        .filter(|r| keep(r))
        .collect();
    semigroup_of_relations(elements)
}

/// `H_n`: all Hall relations, ordered by code; identity `Δ`.
pub fn materialize_hall(n: usize) -> Result<RelationSemigroup> {
    materialize(n, Relation::is_hall)
}

/// `R_n`: all reflexive relations, ordered by code.
pub fn materialize_reflexive(n: usize) -> Result<RelationSemigroup> {
    materialize(n, Relation::is_reflexive)
}

/// The monoid of all binary relations on `n` points.
pub fn materialize_full(n: usize) -> Result<RelationSemigroup> {
    materialize(n, |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Permutation;

    fn brute_force_hall(n: usize) -> u64 {
        let perms = Permutation::all(n).unwrap();
        (0..1u64 << (n * n))
            .filter(|&code| {
                let r = Relation::from_code(n, code).unwrap();
                perms.iter().any(|p| r.contains(&p.to_relation()).unwrap())
            })
            .count() as u64
    }

    #[test]
    fn small_counts_match_brute_force() {
        for (n, expected) in [(1, 1), (2, 7), (3, 247)] {
            assert_eq!(brute_force_hall(n), expected);
            let report = count_hall(n, 1).unwrap();
            assert_eq!(report.total_hall(), expected);
            assert_eq!(report.total_reflexive(), 1 << (n * (n - 1)));
        }
    }

    #[test]
    fn worker_count_does_not_change_counts() {
        let base = count_hall(3, 1).unwrap().counts;
        for w in [2, 3, 8, 64] {
            assert_eq!(count_hall(3, w).unwrap().counts, base);
        }
    }

    #[test]
    fn ranges() {
        assert!(count_hall(0, 1).is_err());
        assert!(count_hall(6, 1).is_err());
        assert!(count_hall(2, 0).is_err());
        assert!(hall_idempotent_census(5).is_err());
        assert!(materialize_hall(4).is_err());
    }

    #[test]
    fn filters_never_reject_hall_matrices() {
        for code in 0..1u64 << 9 {
            let r = Relation::from_code(3, code).unwrap();
            if r.is_hall() {
                assert!(!fails_filters(r.rows(), 7), "{r}");
            }
        }
    }

    #[test]
    fn census_small() {
        let c1 = hall_idempotent_census(1).unwrap();
        assert_eq!((c1.count, c1.all_reflexive), (1, true));
        let c2 = hall_idempotent_census(2).unwrap();
        assert_eq!((c2.count, c2.hall_idempotents, c2.all_reflexive), (4, 4, true));
    }

    #[test]
    fn reflexive_listing() {
        let all: Vec<_> = reflexive_relations(2).collect();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(Relation::is_reflexive));
        assert!(all.windows(2).all(|w| w[0].code() < w[1].code()));
    }

    #[test]
    fn materialized_orders() {
        assert_eq!(materialize_reflexive(2).unwrap().order(), 4);
        assert_eq!(materialize_hall(2).unwrap().order(), 7);
        assert_eq!(materialize_full(2).unwrap().order(), 16);
        let h1 = materialize_hall(1).unwrap();
        assert_eq!(h1.order(), 1);
        let h2 = materialize_hall(2).unwrap();
        assert_eq!(
            h2.semigroup.identity().map(|i| h2.relation(i).clone()),
            Some(Relation::identity(2).unwrap())
        );
    }
}
