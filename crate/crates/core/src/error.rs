use thiserror::Error;

/// Errors raised by the library. Every fallible operation reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {letter}{rank}: {reason}")]
    InvalidCartanType {
        letter: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix of shape {rows}x{cols} cannot hold {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("Laurent polynomial with negative exponents cannot be evaluated at 0")]
    PoleAtZero,

    #[error("Weyl group has order {order}, above the enumeration cap {cap}; rerun with a cap of at least {order}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("lattice integrality violated: {0}")]
    Integrality(String),

    #[error("cover {cover} is not oasitic (requires {condition})")]
    NotOasitic { cover: String, condition: String },

    #[error("invalid Hecke character: {0}")]
    InvalidCharacter(String),

    #[error("the weighted series diverges: {0}")]
    Divergent(String),

    #[error("series not converged at L = {truncation}: last contribution ratio {ratio}")]
    NotConverged { truncation: usize, ratio: String },

    #[error("average over W is not an integer: {num}/{den}")]
    NonIntegral { num: String, den: String },

    #[error("no sign convention reproduces the closed form for {0}")]
    Calibration(String),

    #[error("character {0} is outside the discrete-series classification")]
    UnsupportedCharacter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
