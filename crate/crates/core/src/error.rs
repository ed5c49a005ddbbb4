use num_complex::Complex64;
use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or quadrature did not reach its stopping criterion.
    #[error("{what} did not converge (partial value {partial}, estimated error {est_error:e})")]
    NonConvergence {
        what: &'static str,
        partial: Complex64,
        est_error: f64,
    },

    /// The integrand returned a non-finite value at an interior node.
    #[error("non-finite integrand value at node {node}")]
    Evaluation { node: f64 },

    /// A caller-side contract was broken, e.g. a test function lacks a derivative.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Another error, tagged with the evaluation point that raised it.
    #[error("at {point}: {source}")]
    At { point: String, source: Box<Error> },
}

impl Error {
    /// The underlying error with any point tags removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            e => e,
        }
    }

    /// True for failures of a series or quadrature rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self.root(),
            Error::NonConvergence { .. } | Error::Evaluation { .. }
        )
    }

    pub(crate) fn at(self, point: impl Into<String>) -> Error {
        Error::At {
            point: point.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
