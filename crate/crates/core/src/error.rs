use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("exp is only defined for series with zero constant term")]
    NonzeroConstantTerm,

    #[error("coefficient index {index} exceeds series order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("matrix must be non-empty and square: {0}")]
    NotSquare(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error(
        "invalid Weyl chamber point {0:?}: coordinates must be positive and strictly decreasing"
    )]
    InvalidWeylPoint(Vec<u32>),

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("{what} of size {requested} exceeds the enumeration cap {cap} (raise it with WEYLCOUNT_CAP_RAISE)")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown identity key {0:?}")]
    UnknownIdentity(String),

    #[error("closed form only available for heights 1, 2, 3 (got {0})")]
    UnsupportedHeight(usize),

    #[error("need at least {needed} values, got {got}")]
    TooFewValues { needed: usize, got: usize },
}
