//! Finite-semigroup toolkit centred on monoids of binary relations.
//!
//! The crate provides
//!
//! * [`relation`]: bit-packed binary relations on `{1, …, n}`, permutations,
//!   Hall (perfect matching) detection and a Boolean permanent;
//! * [`semigroup`]: semigroups given by Cayley tables, Green's relations
//!   `R`, `L`, `J`, idempotents, the `J`-trivial and block-group predicates,
//!   closures, homomorphism checks and a bounded division search;
//! * [`group`]: finite groups, power semigroups, the embedding
//!   `A ↦ ρ_A = {(g, h) | g⁻¹h ∈ A}` of `P(G)` into the Hall monoid, the
//!   conjugation action of `S_n` on the reflexive monoid, semidirect products
//!   and the projection `(ρ, π) ↦ ρπ` onto the Hall monoid;
//! * [`enumeration`]: streaming counts of Hall and reflexive relations,
//!   idempotent census, materialized monoids and verification campaigns;
//! * [`catalog`]: the fixed collection of semigroups used for cross-checks.
//!
//! Ground sets are 0-based in the API and 1-based in every text format.

pub mod catalog;
pub mod enumeration;
mod error;
pub mod group;
pub mod relation;
pub mod semigroup;

pub use error::{Error, Result};
pub use relation::{Permutation, Relation};
pub use semigroup::FiniteSemigroup;
