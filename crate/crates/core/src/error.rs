use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid dimension {0}: ground set must have between 1 and 64 points")]
    InvalidDimension(usize),

    #[error("{what} exceeds the supported limit ({value} > {limit})")]
    CapExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NonAssociative { x: String, y: String, z: String },

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("element set is not closed: {left} * {right} = {product} escapes the set")]
    NotClosed {
        left: String,
        right: String,
        product: String,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("relation is not a Hall relation")]
    NotHall,

    #[error("relation is not reflexive")]
    NotReflexive,

    #[error("subsets of a power semigroup must be nonempty")]
    EmptySubset,

    #[error("index {index} out of range for a structure of order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
