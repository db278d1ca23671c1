use thiserror::Error;

/// Errors surfaced by construction, verification and certification routines.
///
/// `InternalInconsistency` is special: it indicates a violated contract that
/// callers are never expected to trigger (a bug or corrupted input), while the
/// remaining variants describe invalid or out-of-regime inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point index {index} out of range for space of size {size}")]
    InvalidIndex { index: usize, size: usize },

    #[error("operation requires a nonempty set: {context}")]
    EmptySet { context: &'static str },

    #[error("operation requires a nonempty family")]
    EmptyFamily,

    #[error("block count mismatch: domain has {domain}, codomain has {codomain}")]
    BlockCountMismatch { domain: usize, codomain: usize },

    #[error("map is not surjective on block {block}: point {point} has empty preimage")]
    NonSurjective { block: usize, point: usize },

    #[error("no block index satisfies the support threshold for S = {s}; extend the family")]
    NoSuchIndex { s: String },

    #[error("generation failure: {reason}")]
    GenerationFailure { reason: String },

    #[error("precondition violated: {what}")]
    PreconditionViolation { what: String },

    #[error("internal inconsistency: {what}")]
    InternalInconsistency { what: String },

    #[error("invalid input: {what}")]
    InvalidInput { what: String },

    #[error("parse error at line {line}: {what}")]
    Parse { line: usize, what: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
