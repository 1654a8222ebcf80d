//! Error type for fallible library entry points.
//!
//! Low-level algebra (element addition, boundaries, actions) treats contract
//! violations such as arity mismatches as programmer errors and panics via
//! `assert!`; the `Error` type below is reserved for data-dependent failures
//! a caller can reasonably hit and handle.

use thiserror::Error;

/// Data-dependent failures surfaced by the library API.
#[derive(Debug, Error)]
pub enum Error {
    /// A modulus that must be prime is not.
    #[error("modulus {0} is not prime")]
    NotPrime(u32),

    /// An operation requiring an odd prime was invoked at p = 2.
    #[error("operation requires an odd prime, got p = 2")]
    OddPrimeRequired,

    /// A cochain expected to be a cocycle is not.
    #[error("cochain in degree {degree} is not a cocycle")]
    NotACocycle { degree: usize },

    /// A requested (co)homological degree lies outside the complex.
    #[error("degree {degree} out of range for a complex of dimension {top}")]
    DegreeOutOfRange { degree: usize, top: usize },

    /// A cohomology class index does not exist in the computed basis.
    #[error("class index {index} out of range: H^{degree} has rank {rank}")]
    NoSuchClass {
        degree: usize,
        index: usize,
        rank: usize,
    },

    /// A class belongs to a different prime or space than the operation.
    #[error("class mismatch: {0}")]
    ClassMismatch(String),

    /// A cell complex failed the simplicial or cubical identity check.
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
}
