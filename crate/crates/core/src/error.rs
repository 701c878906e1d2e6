use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the solvers:
/// bad inputs, non-convergent quadrature, samplers exhausting their budget,
/// and resolvent solves at (near-)eigenvalues.
#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument error: {0}")]
    Argument(String),

    #[error("numeric error: {msg} (residual {residual:.3e})")]
    Numeric { msg: String, residual: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("sampler error: {0}")]
    Sampler(String),

    #[error("resource error: {0}")]
    Resource(String),

    #[error("singular resolvent: {0}")]
    SingularResolvent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn numeric(msg: impl Into<String>, residual: f64) -> Self {
        Error::Numeric {
            msg: msg.into(),
            residual,
        }
    }
}
