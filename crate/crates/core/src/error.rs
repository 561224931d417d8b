use thiserror::Error;

/// Errors surfaced by the library. Preconditions that callers can violate
/// (shape checks, caps, labeling rules) are reported here; internal identity
/// failures are bugs and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index ({i}, {j}) out of range for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("n = {n} exceeds the cap {cap} for {op}")]
    CapExceeded {
        op: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("the zero polynomial is not admitted here")]
    ZeroPolynomial,

    #[error("polynomial has a nonzero imaginary part in some coefficient")]
    NonRealCoefficients,

    #[error("matrix is not tridiagonal: nonzero entry at ({i}, {j})")]
    NotTridiagonal { i: usize, j: usize },

    #[error("support graph is not a star centered at vertex 1")]
    NotStar,

    #[error("support graph contains a cycle")]
    NotForest,

    #[error("matrix is neither symmetric nor Hermitian")]
    NotHermitian,

    #[error("vertex labeling violates the edge ordering conditions ({violations} bad pair(s))")]
    InvalidLabeling { violations: usize },

    #[error("matrix is diagonal; the claim requires an off-diagonal entry")]
    DiagonalMatrix,

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("matrix is not positive semidefinite")]
    NotPositiveSemidefinite,

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("subset contains an index out of range for n = {n}")]
    SubsetOutOfRange { n: usize },

    #[error("grid point {point} lies outside the interval [{lo}, {hi}] required by this claim")]
    GridOutOfRange {
        point: String,
        lo: String,
        hi: String,
    },

    #[error("split index {k} is invalid for n = {n} (need 1 <= k < n)")]
    InvalidSplit { k: usize, n: usize },

    #[error("non-finite entry in floating-point matrix")]
    NonFiniteEntry,

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("unknown generator kind `{0}`")]
    UnknownGenerator(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
