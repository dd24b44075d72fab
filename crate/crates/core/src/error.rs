use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact (remainder {remainder})")]
    NonExactDivision { remainder: String },

    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),

    #[error("polynomial is not monic: {0}")]
    NotMonic(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("generator `{0}` has no assigned image")]
    UnassignedGenerator(char),

    #[error("relator {index} does not map to the identity")]
    RelatorNotTrivial { index: usize },

    #[error("no generator assignment makes every relator trivial")]
    NoValidAssignment,

    #[error("every omitted-generator denominator is singular")]
    AllDenominatorsSingular,

    #[error("matrix polynomial is not split")]
    NotSplit,

    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),

    #[error("certificate failure: {0}")]
    CertificateFailure(String),

    #[error("verification failure: {0}")]
    VerificationFailure(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
