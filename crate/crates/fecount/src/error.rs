//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter that must be prime failed the primality check.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Two group elements (or an element and a group) belong to different
    /// finite abelian groups.
    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    /// A ring specification and a state-space description cannot be combined.
    #[error("incompatible spec: {0}")]
    IncompatibleSpec(String),

    /// A requested computation exceeds the configured resource ceiling.
    #[error("resource limit exceeded: {what} = {requested} is above the ceiling {ceiling}")]
    ResourceLimit {
        what: &'static str,
        requested: u64,
        ceiling: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
