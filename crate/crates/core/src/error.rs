use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument that must be at least 1 was 0.
    #[error("{arg} must be a positive integer, got 0")]
    Zero { arg: &'static str },

    #[error("word length {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("group element for n = {expected} used with a word of length {actual}")]
    LengthMismatch { expected: u64, actual: u64 },

    #[error("unknown color permutation `{0}` (expected one of id, t12, t13, t23, c, c2)")]
    UnknownPermutation(String),

    #[error("unknown sequence kind `{0}`")]
    UnknownKind(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// An exact division or closed-form identity did not hold. Signals a
    /// transcription bug in a formula, never bad input.
    #[error("internal arithmetic check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(value: u64, arg: &'static str) -> Result<()> {
    if value == 0 {
        Err(Error::Zero { arg })
    } else {
        Ok(())
    }
}
