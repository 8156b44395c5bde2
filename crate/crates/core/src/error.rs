use thiserror::Error;

/// Errors raised by the geometry routines.
///
/// The variants follow the failure classes the CLI maps onto exit codes:
/// [`Error::Usage`] is a caller mistake (exit 2), everything else is a
/// domain or feasibility failure of otherwise well-formed input (exit 3).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of a function.
    #[error("{func}: argument {value} is outside the domain ({detail})")]
    Domain {
        func: &'static str,
        value: f64,
        detail: &'static str,
    },
    /// Coincident points, null vectors and similar degenerate input.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// The requested object does not exist (triangle inequality, no root, ...).
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// The request itself is meaningless, e.g. AAA congruence in the plane.
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, value: f64, detail: &'static str) -> Self {
        Error::Domain {
            func,
            value,
            detail,
        }
    }

    /// True for caller mistakes as opposed to infeasible data.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Usage(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
