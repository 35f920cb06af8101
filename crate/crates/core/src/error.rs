use thiserror::Error;

use crate::Content;

/// Errors raised by constructors, bijections and conversions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid cell ({row}, {col}): coordinates are 1-based")]
    InvalidCell { row: usize, col: usize },

    #[error("not a rim hook: {0}")]
    NotARimHook(String),

    #[error("invalid rim hook tableau at content {content}: {reason}")]
    InvalidTableau { content: Content, reason: String },

    #[error("duplicate content {0}")]
    DuplicateContent(Content),

    #[error("hook size mismatch: expected {expected}, found {found}")]
    HookSizeMismatch { expected: usize, found: usize },

    #[error("invalid hook arm {arm} for m = {m}")]
    InvalidArm { arm: usize, m: usize },

    #[error("no preimage: {0}")]
    NoPreimage(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid oscillating tableau at step {step}: {reason}")]
    InvalidOscillating { step: usize, reason: String },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
