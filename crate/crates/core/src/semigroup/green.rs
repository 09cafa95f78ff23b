//! Green's relations `R`, `L`, `J` via explicit principal ideals, plus the
//! predicates built on them.

use std::collections::HashMap;

use super::{FiniteSemigroup, MAX_ORDER};
use crate::error::{Error, Result};

/// `J` needs the two-sided ideal of every element, which is quadratic per element.
pub const J_CLASS_MAX_ORDER: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenSummary {
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<Vec<usize>>,
    pub idempotents: Vec<usize>,
}

impl GreenSummary {
    pub(super) fn compute(s: &FiniteSemigroup) -> Result<Self> {
        Ok(GreenSummary {
            r_classes: r_classes(s)?,
            l_classes: l_classes(s)?,
            j_classes: j_classes(s)?,
            idempotents: s.idempotents(),
        })
    }

    /// Index of the `J`-class containing `x`.
    pub fn j_class_of(&self, x: usize) -> Option<usize> {
        self.j_classes.iter().position(|c| c.contains(&x))
    }
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(k: usize) -> Self {
        BitSet(vec![0; k.div_ceil(64)])
    }

    #[inline]
    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        let fresh = self.0[w] >> b & 1 == 0;
        self.0[w] |= 1 << b;
        fresh
    }
}

fn check_cap(s: &FiniteSemigroup, limit: usize, what: &'static str) -> Result<()> {
    if s.order() > limit {
        return Err(Error::CapExceeded {
            what,
            value: s.order(),
            limit,
        });
    }
    Ok(())
}

/// Groups elements by equal ideal; classes ordered by their least element.
fn partition_by(k: usize, mut ideal: impl FnMut(usize) -> BitSet) -> Vec<Vec<usize>> {
    let mut class_of: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..k {
        let key = ideal(x).0;
        let next = classes.len();
        let c = *class_of.entry(key).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(x);
    }
    classes
}

fn right_ideal(s: &FiniteSemigroup, x: usize) -> BitSet {
    let mut set = BitSet::new(s.order());
    set.insert(x);
    for p in s.row(x) {
        set.insert(p);
    }
    set
}

fn left_ideal(s: &FiniteSemigroup, x: usize) -> BitSet {
    let mut set = BitSet::new(s.order());
    set.insert(x);
    for y in 0..s.order() {
        set.insert(s.mul(y, x));
    }
    set
}

fn two_sided_ideal(s: &FiniteSemigroup, x: usize) -> BitSet {
    // S¹xS¹ = xS¹ ∪ S(xS¹)
    let mut set = BitSet::new(s.order());
    let mut right = vec![x];
    set.insert(x);
    for p in s.row(x) {
        if set.insert(p) {
            right.push(p);
        }
    }
    for &y in &right {
        for t in 0..s.order() {
            set.insert(s.mul(t, y));
        }
    }
    set
}

/// Classes of `x R y ⇔ xS¹ = yS¹`.
pub fn r_classes(s: &FiniteSemigroup) -> Result<Vec<Vec<usize>>> {
    check_cap(s, MAX_ORDER, "order for R-classes")?;
    Ok(partition_by(s.order(), |x| right_ideal(s, x)))
}

/// Classes of `x L y ⇔ S¹x = S¹y`.
pub fn l_classes(s: &FiniteSemigroup) -> Result<Vec<Vec<usize>>> {
    check_cap(s, MAX_ORDER, "order for L-classes")?;
    Ok(partition_by(s.order(), |x| left_ideal(s, x)))
}

/// Classes of `x J y ⇔ S¹xS¹ = S¹yS¹`.
pub fn j_classes(s: &FiniteSemigroup) -> Result<Vec<Vec<usize>>> {
    check_cap(s, J_CLASS_MAX_ORDER, "order for J-classes")?;
    Ok(partition_by(s.order(), |x| two_sided_ideal(s, x)))
}

/// True iff `J` is the equality relation.
pub fn is_j_trivial(s: &FiniteSemigroup) -> Result<bool> {
    Ok(j_classes(s)?.iter().all(|c| c.len() == 1))
}

/// Which pair of equations two distinct idempotents satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdempotentClash {
    /// `ef = e` and `fe = f`: the idempotents generate the same left ideal.
    SameLClass,
    /// `ef = f` and `fe = e`: the idempotents generate the same right ideal.
    SameRClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGroupCheck {
    pub is_block_group: bool,
    /// First offending pair `(e, f, clash)`.
    pub witness: Option<(usize, usize, IdempotentClash)>,
}

/// Block-group test on idempotents only.
///
/// Ordered pairs of distinct idempotents are scanned in index order, first
/// for `ef = e ∧ fe = f`, then for `ef = f ∧ fe = e`.
pub fn is_block_group(s: &FiniteSemigroup) -> BlockGroupCheck {
    let idem = s.idempotents();
    let clash = |kind: IdempotentClash| {
        for &e in &idem {
            for &f in &idem {
                if e == f {
                    continue;
                }
                let (ef, fe) = (s.mul(e, f), s.mul(f, e));
                let hit = match kind {
                    IdempotentClash::SameLClass => ef == e && fe == f,
                    IdempotentClash::SameRClass => ef == f && fe == e,
                };
                if hit {
                    return Some((e, f, kind));
                }
            }
        }
        None
    };
    let witness =
        clash(IdempotentClash::SameLClass).or_else(|| clash(IdempotentClash::SameRClass));
    BlockGroupCheck {
        is_block_group: witness.is_none(),
        witness,
    }
}
