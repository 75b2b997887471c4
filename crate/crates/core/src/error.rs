use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has no entries")]
    EmptyMatrix,
    #[error("matrix rows have unequal lengths (row {row} has {found} entries, expected {expected})")]
    RaggedMatrix { row: usize, expected: usize, found: usize },
    #[error("negative entry {value} at row {row}, column {col}")]
    NegativeEntry { row: usize, col: usize, value: i64 },
    #[error("column {col} is zero")]
    ZeroColumn { col: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("the zero vector does not define a binomial")]
    ZeroVector,
    #[error("vector is not in the kernel of the matrix")]
    NotInKernel,
    #[error("the two terms of a binomial must be distinct")]
    EqualTerms,
    #[error("terms have different degrees")]
    NotHomogeneous,
    #[error("empty set of monomials")]
    EmptySet,
    #[error("variable index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("order matrix is not a term order")]
    InvalidOrder,
    #[error("pair of monomials is not a face (their gcd is 1)")]
    NotAFace,
    #[error("fiber is empty")]
    EmptyFiber,
    #[error("fiber exceeds the cap of {cap} monomials")]
    FiberCapExceeded { cap: usize },
    #[error("internal consistency check failed: {0}")]
    GenerationCheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
