use thiserror::Error;

use crate::diagram::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("incompatible surface: {0}")]
    IncompatibleSurface(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("integer overflow in {0}")]
    Overflow(String),

    #[error("already closed: capping needs at least one boundary circle")]
    AlreadyClosed,

    #[error("type constraint violated: {0}")]
    TypeConstraint(String),

    #[error("cannot slide a curve over itself")]
    SelfSlide,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("nonstandard pair (homological): {0}")]
    NonstandardPair(String),

    #[error("class not primitive: {0}")]
    NotPrimitive(String),

    #[error("cap-off requires p = 0 (family size {size} on genus {genus})")]
    CapRequiresClosedPages { genus: usize, size: usize },

    #[error("diagram is not homologically valid: {}", .0.failures.join("; "))]
    Invalid(Box<ValidationReport>),

    #[error("pairing ill-defined on this input: {0}")]
    PairingIllDefined(String),

    #[error(
        "euler characteristic mismatch: homology gives {computed}, type (g,k) gives {expected}"
    )]
    EulerMismatch { computed: i64, expected: i64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("invalid move: {0}")]
    BadMove(String),
}
