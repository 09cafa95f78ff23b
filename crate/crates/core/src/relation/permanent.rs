//! Ryser's inclusion–exclusion formula for the permanent of a 0/1 matrix.
//!
//! `perm(A) = Σ_{S ⊆ cols} (-1)^{n-|S|} Π_i |row_i ∩ S|`. The Boolean
//! permanent is `1` iff the integer permanent is positive. This route never
//! looks for a matching, so it serves as an oracle for [`Relation::is_hall`].

use super::Relation;
use crate::error::{Error, Result};

pub const PERMANENT_MAX_DIM: usize = 12;

/// Number of permutations contained in the relation.
pub fn permanent_count(r: &Relation) -> Result<u64> {
    let n = r.dim();
    if n > PERMANENT_MAX_DIM {
        return Err(Error::CapExceeded {
            what: "permanent dimension",
            value: n,
            limit: PERMANENT_MAX_DIM,
        });
    }
    let rows = r.rows();
    let mut total: i128 = 0;
    for cols in 1u64..(1 << n) {
        let mut prod: i128 = 1;
        for &row in rows {
            prod *= (row & cols).count_ones() as i128;
            if prod == 0 {
                break;
            }
        }
        if (n - cols.count_ones() as usize) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    debug_assert!(total >= 0);
    Ok(total as u64)
}

/// Permanent over the Boolean semiring.
pub fn boolean_permanent(r: &Relation) -> Result<u8> {
    Ok(u8::from(permanent_count(r)? > 0))
}
