use thiserror::Error;

/// Errors raised by the link model, the invariant engines and the CLI front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the parameters describe the unknot, which is not a link in this setting")]
    UnknotInput,
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("invalid link parameters: {0}")]
    InvalidParameters(String),
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("the Alexander polynomial is zero")]
    ZeroPolynomial,
    #[error("the link is a connected sum of Hopf links and is not prime")]
    NotPrime,
    #[error("operation requires a 0-, 1- or 2-core link")]
    NotCore,
    #[error("expected {expected} branching weights, got {got}")]
    WeightMismatch { expected: usize, got: usize },
    #[error("invalid branching weight {weight} for n = {n}")]
    InvalidWeight { weight: i64, n: i64 },
    #[error("n must be at least 2 (got {0})")]
    InvalidDegree(i64),
    #[error("(link, n) pair is not in the cataloged non-left-orderable families")]
    NotInCatalog,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown link alias `{0}`")]
    UnknownAlias(String),
    #[error("unknown table `{0}`")]
    UnknownTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
