use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type/rank pair {0}")]
    InvalidType(String),
    #[error("isogeny label {label} is not compatible with {root_system}")]
    IncompatibleIsogeny { label: String, root_system: String },
    #[error("malformed root datum: {0}")]
    InvalidDatum(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("structure constants violate the Jacobi identity on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("unsupported representation family: {0}")]
    UnsupportedFamily(String),
    #[error("p-adic precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("section not defined at p = {p}: p divides N = {n}")]
    SectionUndefined { p: u64, n: u64 },
    #[error("element outside the required domain: {0}")]
    NotInDomain(String),
    #[error("p = {0} is not g-good for this datum")]
    NotGood(u64),
    #[error("p = {0} is not supported here (p > 2 required)")]
    PrimeTooSmall(u64),
    #[error("element is not regular semisimple")]
    NotRegularSemisimple,
    #[error("invariant form is not perfect at p = {0}")]
    FormNotPerfect(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("reduction did not converge after {0} iterations")]
    NonConvergence(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::JacobiFailure(..) | Error::NonConvergence(_) | Error::Internal(_)
        )
    }
}
