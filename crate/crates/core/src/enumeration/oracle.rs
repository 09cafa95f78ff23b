//! Counts of Hall matrices that never run a matching on an individual matrix.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::relation::Permutation;

pub const ORACLE_MAX_DIM: usize = 5;

fn check(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    if n > ORACLE_MAX_DIM {
        return Err(Error::CapExceeded {
            what: "oracle dimension",
            value: n,
            limit: ORACLE_MAX_DIM,
        });
    }
    Ok(())
}

fn support(p: &Permutation) -> u64 {
    let n = p.dim();
    p.images()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &j)| acc | 1 << (i * n + j))
}

/// Inclusion–exclusion over the events "the matrix contains `π`":
/// `|⋃ A_π| = Σ_{∅≠T⊆S_n} (-1)^{|T|+1} 2^{n² - |⋃_{π∈T} supp π|}`.
///
/// For `n ≤ 3` the sum runs over all subsets of `S_n` directly. Beyond that
/// the subsets are grouped by the union of their supports: a table from
/// union to accumulated sign is extended one permutation at a time, and
/// entries whose signs cancel are dropped.
pub fn count_hall_inclusion_exclusion(n: usize) -> Result<u64> {
    check(n)?;
    let supports: Vec<u64> = Permutation::all(n)?.iter().map(support).collect();
    let cells = (n * n) as u32;
    let term = |union: u64| 1i128 << (cells - union.count_ones());

    let total: i128 = if n <= 3 {
        (1u64..1 << supports.len())
            .map(|t| {
                let union = supports
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| t >> i & 1 == 1)
                    .fold(0, |acc, (_, &s)| acc | s);
                let sign = if t.count_ones() % 2 == 1 { 1 } else { -1 };
                sign * term(union)
            })
            .sum()
    } else {
        let mut signs: HashMap<u64, i64> = HashMap::new();
        for &s in &supports {
            let mut updates: Vec<(u64, i64)> = signs.iter().map(|(&u, &c)| (u | s, -c)).collect();
            updates.push((s, 1));
            for (u, c) in updates {
                let entry = signs.entry(u).or_insert(0);
                *entry += c;
                if *entry == 0 {
                    signs.remove(&u);
                }
            }
        }
        signs.iter().map(|(&u, &c)| c as i128 * term(u)).sum()
    };
    u64::try_from(total).map_err(|_| Error::InvalidArgument("negative union count".into()))
}

/// Transfer-matrix count. Rows are added one at a time; the state after
/// `i` rows is the family of `i`-element column sets into which those rows
/// can be matched, and a matrix is Hall iff the final family is `{[n]}`.
pub fn count_hall_transfer(n: usize) -> Result<u64> {
    check(n)?;
    let full = (1usize << n) - 1;
    // family: bit C is set iff the column set C is matchable
    let mut states: HashMap<u64, u64> = HashMap::from([(1u64, 1u64)]);
    for _ in 0..n {
        let mut next: HashMap<u64, u64> = HashMap::new();
        for (&family, &count) in &states {
            for row in 1usize..=full {
                let mut grown = 0u64;
                for c in (0..=full).filter(|c| family >> c & 1 == 1) {
                    let mut free = row & !c;
                    while free != 0 {
                        let j = free.trailing_zeros();
                        free &= free - 1;
                        grown |= 1 << (c | 1 << j);
                    }
                }
                if grown != 0 {
                    *next.entry(grown).or_insert(0) += count;
                }
            }
        }
        states = next;
    }
    Ok(states.get(&(1u64 << full)).copied().unwrap_or(0))
}
