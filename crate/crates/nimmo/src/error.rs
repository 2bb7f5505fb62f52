use std::path::PathBuf;

/// Error type shared by the whole crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An operation was called with arguments that violate its contract.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An algorithm or experiment configuration is invalid.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A benchmark problem could not be constructed.
    #[error("problem construction failed: {0}")]
    Construction(String),

    /// Reference-set generation is not available for a problem.
    #[error("unsupported problem for reference-set generation: {0}")]
    Unsupported(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path}: {message}")]
    Parse { path: PathBuf, message: String },
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn parse(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
