use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term is zero")]
    NotInvertible,

    #[error("series is not a polynomial of degree <= {bound}: coefficient of q^{degree} is nonzero")]
    NotAPolynomial { bound: usize, degree: usize },

    #[error("degree bound {bound} exceeds truncation cap {cap}")]
    BoundExceedsCap { bound: usize, cap: usize },

    #[error("invalid conjugacy class {class} for {family} of rank {rank}")]
    InvalidClass {
        family: String,
        rank: usize,
        class: String,
    },

    #[error("rank {rank} is not supported for {family}")]
    InvalidRank { family: String, rank: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("seed {seed} cannot be padded to size {n}")]
    PaddingInvalid { seed: String, n: usize },

    #[error("{what} = {value} exceeds the guard {limit}; raise the limit explicitly to proceed")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
