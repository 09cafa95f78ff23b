use std::collections::HashMap;

use super::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::relation::{compose_rows, Relation};

/// A semigroup of relations materialized as an abstract table.
#[derive(Debug, Clone)]
pub struct RelationSemigroup {
    pub semigroup: FiniteSemigroup,
    elements: Vec<Relation>,
    index: HashMap<Relation, usize>,
}

impl RelationSemigroup {
    pub fn elements(&self) -> &[Relation] {
        &self.elements
    }

    pub fn relation(&self, i: usize) -> &Relation {
        &self.elements[i]
    }

    pub fn index_of(&self, r: &Relation) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Builds the Cayley table of a list of relations closed under composition.
///
/// Element `i` of the table is `elements[i]`; labels are the row strings.
pub fn semigroup_of_relations(elements: Vec<Relation>) -> Result<RelationSemigroup> {
    let Some(first) = elements.first() else {
        return Err(Error::InvalidTable("no relations given".into()));
    };
    let dim = first.dim();
    if let Some(r) = elements.iter().find(|r| r.dim() != dim) {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: r.dim(),
        });
    }
    super::check_order(elements.len())?;
    let mut index = HashMap::with_capacity(elements.len());
    for (i, r) in elements.iter().enumerate() {
        if index.insert(r.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(r.label()));
        }
    }
    let k = elements.len();
    let mut table = Vec::with_capacity(k * k);
    let mut buf = vec![0u64; dim];
    for x in &elements {
        for y in &elements {
            compose_rows(x.rows(), y.rows(), &mut buf);
            let p = Relation::from_rows(dim, buf.clone())?;
            match index.get(&p) {
                Some(&i) => table.push(i as u32),
                None => {
                    return Err(Error::NotClosed {
                        left: x.label(),
                        right: y.label(),
                        product: p.label(),
                    })
                }
            }
        }
    }
    let labels = elements.iter().map(Relation::label).collect();
    let semigroup = FiniteSemigroup::from_flat(labels, table)?;
    Ok(RelationSemigroup {
        semigroup,
        elements,
        index,
    })
}
