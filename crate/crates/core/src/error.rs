use crate::field::Field;

/// Everything that can go wrong constructing or combining objects.
///
/// Checks that *report* failures (axiom violations, centrality being false)
/// return structured reports instead of errors; `Error` is reserved for
/// ill-formed inputs, impossible requests, and internal invariant breaks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} is not below 2^31")]
    PrimeTooLarge(u64),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("scalar {value} is not a canonical residue mod {modulus}")]
    NotACanonicalResidue { value: u64, modulus: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("algebra is not associative: first violating basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("map is not multiplicative: first violating basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),

    #[error("subspace is not an ideal: basis element {index} times ideal row {row} escapes")]
    NotAnIdeal { index: usize, row: usize },

    #[error("homomorphism is not surjective (rank {rank} < dim {dim})")]
    NotSurjective { rank: usize, dim: usize },

    #[error("subspace is not closed under multiplication (rows {0}, {1})")]
    NotClosed(usize, usize),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid split extension: {0}")]
    InvalidExtension(String),

    #[error("no factorization: {0}")]
    NoFactorization(String),

    #[error("enumeration of {what} needs {candidates} candidates, over budget {budget}")]
    BudgetExceeded {
        what: String,
        candidates: u128,
        budget: u64,
    },

    #[error("cannot enumerate over the infinite field {0}")]
    InfiniteField(Field),

    #[error("{file}: parse error at line {line}, column {column}: {message}")]
    Parse {
        file: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid file {file}: {message}")]
    InvalidFile { file: String, message: String },

    #[error("square does not commute")]
    SquareNotCommuting,

    #[error("theorem violation (implementation bug): {0}")]
    TheoremViolation(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
