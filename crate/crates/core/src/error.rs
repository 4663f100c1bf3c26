//! Error type shared by every module of the crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;

/// All failure modes of the library.
///
/// The variants are grouped by how a front end should treat them: bad or
/// out-of-cap inputs ([`CoreError::exit_code`] = 2) versus violations of an
/// internal invariant that indicate a bug (= 3). Verification *failures*
/// (a theorem check that does not hold) are not errors; suites report them
/// as data.
#[derive(Debug, thiserror::Error)]
pub enum CoreError {
    /// Two subspaces or matrices living in different ambient spaces were combined.
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch {
        /// Ambient dimension of the left operand.
        left: usize,
        /// Ambient dimension of the right operand.
        right: usize,
    },

    /// Operands over different fields were combined.
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    /// A documented size cap was exceeded; the operation refuses rather than thrash.
    #[error("size cap exceeded for {what}: limit {limit}, got {got}")]
    SizeCap {
        /// What was being enumerated or computed.
        what: &'static str,
        /// The documented cap.
        limit: usize,
        /// The requested size.
        got: usize,
    },

    /// A caller violated an argument contract (e.g. a weight with the wrong coordinate sum).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A mathematical precondition of the operation does not hold for this input.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// A standard construction could not produce the requested matroid over this field.
    #[error("unrealizable: {0}")]
    Unrealizable(String),

    /// Malformed input data (JSON, expression syntax, CLI values).
    #[error("invalid input: {0}")]
    Input(String),

    /// An internal invariant failed; indicates a bug, not a property of the input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CoreError {
    /// Process exit code a CLI should use for this error:
    /// 2 for input/precondition problems, 3 for internal invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CoreError::Internal(_) => 3,
            _ => 2,
        }
    }
}
