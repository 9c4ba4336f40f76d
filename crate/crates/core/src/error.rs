use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("variable `{name}` has weight {weight}; weights must be at least 1")]
    InvalidWeight { name: String, weight: u32 },

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("operands belong to different rings")]
    MixedRings,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },

    #[error("operation requires a ring without odd variables")]
    UnsupportedRing,

    #[error("ideal generator is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("series denominator vanishes at T = 0")]
    NotExpandable,

    #[error("division by the zero series")]
    DivisionByZero,

    #[error("unreduced kappa symbol {0}")]
    UnreducedSymbol(String),

    #[error("ring specification, line {line}: {message}")]
    SpecFile { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
