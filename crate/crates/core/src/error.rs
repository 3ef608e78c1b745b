use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition has {parts} nonzero parts but only {n} rows are available")]
    TooManyParts { parts: usize, n: usize },

    #[error("({xi}) is not dominated by ({mu})")]
    NotDominated { xi: String, mu: String },

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomials have {left} and {right} variables")]
    VariableMismatch { left: usize, right: usize },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("Schur decomposition did not terminate after {0} steps")]
    DecompositionStalled(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
