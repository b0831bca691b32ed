use thiserror::Error;

/// Errors surfaced by the library.
///
/// Contract violations (shape mismatches, invalid configuration) are
/// programming errors at call sites and carry enough context to name the
/// offending dimension or field. I/O and format errors carry the path.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numerical failure in {context}: {detail}")]
    Numerical { context: String, detail: String },

    #[error("sampling failed: {0}")]
    Sampling(String),

    #[error("grid too large to enumerate: {size} tuples exceeds limit {limit}; sample instead")]
    GridTooLarge { size: u128, limit: u128 },

    #[error("format error in {path}: {detail}")]
    Format { path: String, detail: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            op,
            detail: detail.into(),
        }
    }

    pub fn config(detail: impl Into<String>) -> Self {
        Error::Config(detail.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn format(path: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
