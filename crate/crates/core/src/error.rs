use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("images {images:?} are not a bijection on 0..{degree}")]
    NotABijection { images: Vec<usize>, degree: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("{what} exceeds the size cap: {size} > {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("parse error in {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("unknown group name {0:?}")]
    UnknownGroup(String),

    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid class function: {0}")]
    InvalidClassFunction(String),

    #[error("exponent on the identity class must be zero")]
    IdentityExponentNonzero,

    #[error("map must fix the identity")]
    MapDoesNotFixIdentity,

    #[error("map fails the equivariance criterion: {0}")]
    CriterionFailed(String),

    #[error("group axiom failed during construction: {0}")]
    AxiomFailure(String),

    #[error("right translation by column {column} is not a bijection")]
    NonBijectiveColumn { column: usize },

    #[error("invalid table: {0}")]
    InvalidTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
