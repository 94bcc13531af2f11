use thiserror::Error;

/// Errors raised by group, fusion-system and subsystem constructions.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FuseError {
    #[error("size guard: {what} is {actual}, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("containment violation: {0}")]
    Containment(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("subgroup is not strongly closed: {0}")]
    NotStronglyClosed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction could not be verified: {0}")]
    ConstructionUnverified(String),
    #[error("Alperin decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("character is not well defined: {0}")]
    IllDefinedCharacter(String),
    #[error("no unique maximal subgroup: {0}")]
    UniquenessViolation(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid group: {0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = FuseError> = std::result::Result<T, E>;

impl FuseError {
    /// Process exit code: 1 for a violated hypothesis, 2 for a failed
    /// verification of a guaranteed property, 3 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            FuseError::HypothesisViolation(_)
            | FuseError::Precondition(_)
            | FuseError::Containment(_)
            | FuseError::NotNormal(_)
            | FuseError::NotStronglyClosed(_) => 1,
            FuseError::TheoremViolation(_)
            | FuseError::ConstructionUnverified(_)
            | FuseError::DecompositionFailure(_)
            | FuseError::IllDefinedCharacter(_)
            | FuseError::UniquenessViolation(_) => 2,
            FuseError::SizeGuard { .. }
            | FuseError::Parse(_)
            | FuseError::Validation(_)
            | FuseError::Io(_) => 3,
        }
    }
}
