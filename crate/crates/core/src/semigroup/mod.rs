//! Finite semigroups given by their Cayley tables.

mod cayley;
mod green;
mod morphism;
mod relations;

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use cayley::{emit_cayley, parse_cayley};
pub use green::{
    is_block_group, is_j_trivial, j_classes, l_classes, r_classes, BlockGroupCheck, GreenSummary,
    IdempotentClash, J_CLASS_MAX_ORDER,
};
pub use morphism::{
    check_homomorphism, find_division, DivisionBounds, DivisionSearch, DivisionWitness,
    HomomorphismCheck, DIVISION_MAX_GENERATORS, DIVISION_MAX_TARGET,
};
pub use relations::{semigroup_of_relations, RelationSemigroup};

/// Largest table accepted anywhere in the engine.
pub const MAX_ORDER: usize = 5000;

// Above this order the associativity scan is split across the rayon pool.
const PARALLEL_ASSOC_THRESHOLD: usize = 256;

/// A finite semigroup: element labels plus a validated, associative Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    labels: Vec<String>,
    table: Vec<u32>,
    identity: Option<usize>,
}

impl std::fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("order", &self.order())
            .field("identity", &self.identity)
            .finish()
    }
}

impl FiniteSemigroup {
    /// Validates a table given as rows of element indices (0-based).
    ///
    /// Checks shape, entry range, label uniqueness and associativity; the
    /// first non-associative triple in `(x, y, z)` order is reported.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let k = labels.len();
        if table.len() != k {
            return Err(Error::InvalidTable(format!(
                "{} labels but {} table rows",
                k,
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(k * k);
        for (i, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidTable(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    k
                )));
            }
            flat.extend(row.iter().map(|&v| v as u32));
        }
        Self::from_flat(labels, flat)
    }

    /// Builds the table from a multiplication function, then validates it.
    pub fn from_fn(labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let k = labels.len();
        check_order(k)?;
        let mut flat = Vec::with_capacity(k * k);
        for x in 0..k {
            for y in 0..k {
                flat.push(mul(x, y) as u32);
            }
        }
        Self::from_flat(labels, flat)
    }

    fn from_flat(labels: Vec<String>, table: Vec<u32>) -> Result<Self> {
        let k = labels.len();
        check_order(k)?;
        check_labels(&labels)?;
        if let Some(pos) = table.iter().position(|&v| v as usize >= k) {
            return Err(Error::InvalidTable(format!(
                "entry ({}, {}) = {} is outside 1..={}",
                pos / k + 1,
                pos % k + 1,
                table[pos] as usize + 1,
                k
            )));
        }
        let s = Self::from_trusted(labels, table);
        if let Some((x, y, z)) = s.first_non_associative_triple() {
            return Err(Error::NonAssociative {
                x: s.labels[x].clone(),
                y: s.labels[y].clone(),
                z: s.labels[z].clone(),
            });
        }
        Ok(s)
    }

    /// For tables that are associative by construction (sub-tables, adjoined identities).
    pub(crate) fn from_trusted(labels: Vec<String>, table: Vec<u32>) -> Self {
        let k = labels.len();
        debug_assert_eq!(table.len(), k * k);
        let identity = (0..k).find(|&e| {
            (0..k).all(|x| table[e * k + x] as usize == x && table[x * k + e] as usize == x)
        });
        FiniteSemigroup {
            labels,
            table,
            identity,
        }
    }

    fn first_non_associative_triple(&self) -> Option<(usize, usize, usize)> {
        let k = self.order();
        let t = &self.table;
        let scan = |x: usize| {
            for y in 0..k {
                let xy = t[x * k + y] as usize;
                for z in 0..k {
                    let yz = t[y * k + z] as usize;
                    if t[xy * k + z] != t[x * k + yz] {
                        return Some((x, y, z));
                    }
                }
            }
            None
        };
        if k >= PARALLEL_ASSOC_THRESHOLD {
            (0..k).into_par_iter().find_map_first(scan)
        } else {
            (0..k).find_map(scan)
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y] as usize
    }

    /// Row `x` of the table: `x·y` for every `y`.
    pub fn row(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let k = self.order();
        self.table[x * k..(x + 1) * k].iter().map(|&v| v as usize)
    }

    /// The table as rows of 0-based indices.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|x| self.row(x).collect()).collect()
    }

    /// `S¹`: `self` if it already has an identity, otherwise `self` plus a
    /// fresh element acting as identity (appended last).
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.identity.is_some() {
            return self.clone();
        }
        let k = self.order();
        let mut label = String::from("1");
        while self.labels.contains(&label) {
            label.push('\'');
        }
        let mut labels = self.labels.clone();
        labels.push(label);
        let mut table = Vec::with_capacity((k + 1) * (k + 1));
        for x in 0..k {
            table.extend_from_slice(&self.table[x * k..(x + 1) * k]);
            table.push(x as u32);
        }
        table.extend((0..=k).map(|x| x as u32));
        Self::from_trusted(labels, table)
    }

    /// Indices `e` with `e·e = e`, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order()).filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.order();
        (0..k).all(|x| (x + 1..k).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The least subsemigroup containing `generators`, computed by a worklist.
    pub fn subsemigroup_closure(&self, generators: &[usize]) -> Result<Subsemigroup> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "closure needs at least one generator".into(),
            ));
        }
        let k = self.order();
        if let Some(&g) = generators.iter().find(|&&g| g >= k) {
            return Err(Error::OutOfRange { index: g, order: k });
        }
        let mut member = vec![false; k];
        let mut elems = Vec::new();
        for &g in generators {
            if !std::mem::replace(&mut member[g], true) {
                elems.push(g);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for j in 0..=i {
                let y = elems[j];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !std::mem::replace(&mut member[p], true) {
                        elems.push(p);
                    }
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        Ok(self.restrict(elems))
    }

    /// Sub-table on a closed, sorted element list.
    fn restrict(&self, embedding: Vec<usize>) -> Subsemigroup {
        let mut local = vec![u32::MAX; self.order()];
        for (i, &x) in embedding.iter().enumerate() {
            local[x] = i as u32;
        }
        let mut table = Vec::with_capacity(embedding.len() * embedding.len());
        for &x in &embedding {
            for &y in &embedding {
                table.push(local[self.mul(x, y)]);
            }
        }
        let labels = embedding.iter().map(|&x| self.labels[x].clone()).collect();
        Subsemigroup {
            semigroup: Self::from_trusted(labels, table),
            embedding,
        }
    }

    /// The subsemigroup generated by all idempotents.
    pub fn idempotent_generated(&self) -> Subsemigroup {
        let idem = self.idempotents();
        // A finite nonempty semigroup always has an idempotent.
        self.subsemigroup_closure(&idem)
            .expect("finite semigroups have idempotents")
    }

    pub fn green_summary(&self) -> Result<GreenSummary> {
        GreenSummary::compute(self)
    }
}

/// A subsemigroup as a standalone table plus its inclusion into the parent.
#[derive(Debug, Clone)]
pub struct Subsemigroup {
    pub semigroup: FiniteSemigroup,
    /// `embedding[i]` is the parent index of local element `i` (ascending).
    pub embedding: Vec<usize>,
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidTable("a semigroup needs at least one element".into()));
    }
    if k > MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "semigroup order",
            value: k,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) fn labels<I: IntoIterator<Item = S>, S: Into<String>>(it: I) -> Vec<String> {
    it.into_iter().map(Into::into).collect()
}
