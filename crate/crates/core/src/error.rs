use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {edges} edges, enumeration cap is {cap}")]
    Capacity { edges: usize, cap: usize },

    #[error("iteration budget exceeded: {needed} > {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("d∘d ≠ 0 at grading {grading:?}, degree {degree}")]
    Integrity { grading: Vec<u32>, degree: usize },

    #[error("identity violated: {0}")]
    TheoryViolation(String),

    #[error("unbound variable {0}")]
    UnboundVariable(String),

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
