use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("curve parameter y must be a positive rational, got {0}")]
    NonPositiveY(String),

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("expected degree {expected}, got {found}")]
    DegreeMismatch { expected: i64, found: i64 },

    #[error("operation requires a degree-0 line bundle class, got degree {0}")]
    NonzeroDegree(i64),

    #[error("determinant multiset must have {expected} element(s), got {found}")]
    WrongMultisetSize { expected: u32, found: usize },

    #[error("determinant multiset elements must have degree {expected}, got {found}")]
    WrongElementDegree { expected: i64, found: i64 },

    #[error("point is not fixed by the involution")]
    NotFixed,

    #[error("expected a stable class (coprime rank and degree), got rank {rank}, degree {degree}")]
    NotStable { rank: u32, degree: i64 },

    #[error("class is not self-conjugate")]
    NotSelfConjugate,

    #[error("bundle is not semi-stable")]
    NotSemistable,

    #[error("a formal bundle needs at least one summand")]
    EmptyBundle,

    #[error("first Stiefel-Whitney vector has length {found}, expected {expected}")]
    WrongW1Length { expected: usize, found: usize },

    #[error("topological type violates the parity constraint")]
    ParityViolation,

    #[error("grid resolution must be even and at least 2, got {0}")]
    BadGridResolution(u32),

    #[error("rank {rank} and degree {degree} must be coprime here")]
    NotCoprime { rank: u32, degree: i64 },

    #[error("genus must be at least 2 for the higher-genus table, got {0}")]
    GenusTooSmall(u32),

    #[error("a genus-{genus} curve has at most {max} real components, got n = {n}")]
    TooManyComponents { n: u32, genus: u32, max: u32 },

    #[error("enumeration of {count} multisets exceeds the budget of {budget}; use a coarser grid")]
    EnumerationTooLarge { count: u128, budget: u128 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
