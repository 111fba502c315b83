use thiserror::Error;

/// Errors raised by the algebra engine and the expression front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Operands living in incompatible algebras or bases.
    #[error("type error: {0}")]
    Type(String),
    /// A request beyond a configured computation bound.
    #[error("capability error: {0}")]
    Capability(String),
    /// Malformed expression or document text; `column` is a 0-based character offset.
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn type_mismatch(msg: impl Into<String>) -> Self {
        Error::Type(msg.into())
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn syntax(column: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            column,
            message: msg.into(),
        }
    }
}
