use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// The top rung of the precision ladder could not certify the requested
    /// accuracy.
    #[error("precision exhausted in {context}: needed more than {ceiling_bits} bits")]
    PrecisionExhausted { context: &'static str, ceiling_bits: u32 },

    #[error("iteration did not converge in {context} after {iterations} steps")]
    NonConvergence { context: &'static str, iterations: usize },

    #[error("argument outside the valid domain: {0}")]
    OutOfDomain(String),

    #[error("series argument outside the reliable range: {0}")]
    RangeExceeded(String),

    #[error("quadrature tolerance {tol:e} unreachable (error estimate {estimate:e})")]
    QuadratureTolerance { tol: f64, estimate: f64 },

    #[error("contour construction failed: {0}")]
    ContourConstruction(String),

    #[error("curve continuation failed: {0}")]
    Continuation(String),

    #[error("zero certification failed: {0}")]
    Certification(String),

    #[error("unknown model name {0:?}")]
    UnknownModel(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code contract: 2 for configuration problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::UnknownModel(_) => 2,
            _ => 1,
        }
    }
}
