use thiserror::Error;

/// Errors surfaced by parsing and by the guarded analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("{0}")]
    Input(String),
    /// An enumeration or search would exceed its configured size guard.
    #[error("{what} exceeds the desk-scale guard ({detail}); pass --unsafe-limits to override")]
    Guard { what: &'static str, detail: String },
    /// A bounded search finished without finding what was asked for.
    #[error("search exhausted: {0}")]
    Search(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
