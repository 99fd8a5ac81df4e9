use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Elimination found no usable pivot in the given column.
    #[error("singular matrix: no usable pivot in column {pivot}")]
    SingularMatrix { pivot: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("alpha level {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),

    /// A fuzzy number, matrix or vector violates one of its invariants.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("dimension {n} exceeds the limit of {max} for vertex enumeration")]
    ResourceLimit { n: usize, max: usize },

    #[error("operation requires dimension {required}, system has dimension {found}")]
    UnsupportedDimension { required: usize, found: usize },

    #[error("empty point set")]
    EmptySet,

    /// Problem or solution file could not be read or parsed.
    #[error("{0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Error {
    Error::Invalid {
        what,
        reason: reason.into(),
    }
}
