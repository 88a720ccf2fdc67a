use thiserror::Error;

/// Errors raised by the number-theoretic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed rings: {0} and {1}")]
    MixedRings(&'static str, &'static str),

    #[error("zero is not allowed here: {0}")]
    Zero(&'static str),

    #[error("{0} is not primary (expected an element congruent to 1 modulo 3)")]
    NotPrimary(String),

    #[error("{0} is divisible by the ramified prime")]
    Ramified(String),

    #[error("denominator {0} is not coprime to 1+i")]
    EvenDenominator(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("symbol of order {order} is not defined over the {ring} integers")]
    OrderMismatch { order: u32, ring: &'static str },

    #[error("D must be cube-free (got {0})")]
    NotCubeFree(i64),

    #[error("matrix is not in the congruence subgroup: {0}")]
    NotInGroup(String),

    #[error("residue symbol is undefined: {0}")]
    UndefinedSymbol(String),

    #[error("no valid factorization of the Kubota invariants: {0}")]
    NoFactorization(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no central value available for D = {0}")]
    MissingValue(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
