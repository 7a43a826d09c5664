use thiserror::Error;

/// Errors produced by graph builders, spectral routines, the census, and the codecs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The neighbour count of `vertex` into `cell` differs from that of another
    /// vertex in the same cell.
    #[error("partition is not equitable: vertex {vertex} disagrees with its cell on the neighbour count into cell {cell}")]
    NotEquitable { vertex: usize, cell: usize },

    #[error("k(k-1) = {product} is not divisible by p-k-1 = {divisor} (k = {k}, p = {p}, remainder {remainder})")]
    NotDivisible {
        k: u64,
        p: u64,
        product: u64,
        divisor: u64,
        remainder: u64,
    },

    #[error("n = {n} exceeds the census ceiling of {ceiling} vertices")]
    ResourceLimit { n: usize, ceiling: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("root refinement exceeded the denominator cap of 2^64")]
    RefinementLimit,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
