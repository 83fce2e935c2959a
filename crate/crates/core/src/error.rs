use thiserror::Error;

/// Errors produced by validation, parsing and the gated operations.
///
/// `Inconsistency` is reserved for cross-check failures between two
/// independently implemented routes to the same answer; callers should
/// treat it as an internal error, not as bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplicity must be positive: a = {a} in pair #{index}")]
    NonPositiveMultiplicity { a: i64, index: usize },

    #[error("({a},{b}) is not a valid pair: a and b must be coprime when a >= 2")]
    NotCoprime { a: i64, b: i64 },

    #[error("ellipsoid axes must be positive, got {value}")]
    NonPositiveAxis { value: String },

    #[error("weights must be positive, got {weight}")]
    NonPositiveWeight { weight: i64 },

    #[error("weight list must be nonempty")]
    EmptyWeights,

    #[error("weight product does not fit in 64 bits")]
    WeightOverflow,

    #[error("fibration has euler number 0 and is not realizable by a Besse Reeb flow")]
    NotRealizable,

    #[error("cone orders must be >= 2, got {order}")]
    InvalidConeOrder { order: i64 },

    #[error("a nonorientable orbifold needs at least one crosscap")]
    InvalidCrosscapCount,

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("cannot parse `{input}`: {reason} (expected `g;(a1,b1),(a2,b2),...`)")]
    Parse { input: String, reason: String },

    #[error("cross-check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
