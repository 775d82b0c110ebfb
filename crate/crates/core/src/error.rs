use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set of size {0} exceeds the supported maximum of 62 points")]
    GroundSetTooLarge(usize),

    #[error("invalid slice parameters n = {n}, k = {k}")]
    InvalidSlice { n: usize, k: usize },

    #[error("point {point} is outside the ground set of size {n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("block of size {found} does not belong to the {expected}-slice")]
    WrongBlockSize { expected: usize, found: usize },

    #[error("functions live on different slices: ({0}, {1}) vs ({2}, {3})")]
    SliceMismatch(usize, usize, usize, usize),

    #[error("expected I to be a subset of J")]
    NotSubset,

    #[error("expected I and J to be disjoint")]
    NotDisjoint,

    #[error("function is not Boolean")]
    NotBoolean,

    #[error("the set is empty")]
    EmptySet,

    #[error("this operation needs 2k <= n, got n = {n}, k = {k}; dualize first")]
    NeedsStandardRange { n: usize, k: usize },

    #[error("the paired representation is ambiguous or not unique for this input: {0}")]
    Ambiguous(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameters {0} do not match the required family")]
    ParameterMismatch(String),

    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
