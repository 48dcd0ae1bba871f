use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown vertex {vertex} (graph has {n} vertices)")]
    UnknownVertex { vertex: usize, n: usize },

    #[error("inconsistent line enumeration for q={q}: {detail}")]
    LineInconsistency { q: u32, detail: String },

    #[error("degenerate joint spectrum on line {line} of q={q} after {attempts} attempts")]
    DegenerateJointSpectrum {
        q: u32,
        line: usize,
        attempts: usize,
    },

    #[error("ray count mismatch for q={q}: expected {expected}, found {found}")]
    CountMismatch {
        q: u32,
        expected: usize,
        found: usize,
    },

    #[error("graph too large for this operation: {n} vertices (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("graph is not contextual")]
    NotContextual,

    #[error("SDP did not converge after {iterations} iterations (best {best:.6}, residual {residual:.3e})")]
    NotConverged {
        iterations: usize,
        best: f64,
        residual: f64,
    },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown catalog entry '{0}'")]
    UnknownCatalogEntry(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Analysis failures (as opposed to usage or input errors).
    pub fn is_analysis_error(&self) -> bool {
        matches!(
            self,
            Error::LineInconsistency { .. }
                | Error::DegenerateJointSpectrum { .. }
                | Error::CountMismatch { .. }
                | Error::NotConverged { .. }
                | Error::NotContextual
                | Error::BudgetExceeded(_)
                | Error::TooLarge { .. }
        )
    }
}
