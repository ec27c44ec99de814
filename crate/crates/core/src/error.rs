//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} failed the primality check")]
    NotPrime(u64),
    #[error("{0} exceeds the deterministic primality range (< 3.3e14)")]
    PrimeOutOfRange(u64),
    #[error("operands live over different primes: {0} vs {1}")]
    MixedPrimes(u64, u64),
    #[error("|x|_{p} = {norm} is not inside the convergence region |x|_{p} < {bound}")]
    OutsideRegion { p: u64, norm: String, bound: String },
    #[error("|x|_{p} = {bound} lies exactly on the convergence boundary, which is not classified")]
    OnBoundary { p: u64, bound: String },
    #[error("invalid reconstruction bounds: {0}")]
    BadBounds(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("constant coefficient must equal sum of C_r*u_r = {required}")]
    ConstantTermMismatch { required: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}
