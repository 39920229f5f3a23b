use thiserror::Error;

use crate::surface::Surface;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{surface} has complexity {complexity}; bounds need complexity >= 2")]
    Complexity { surface: Surface, complexity: i64 },

    #[error("malformed configuration: {0}")]
    Structure(String),

    #[error("unknown curve `{0}`")]
    UnknownCurve(String),

    #[error("configuration is not a valid Penner pair: {0}")]
    Validation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("proviso violated: need n > 38g - 38, got n = {punctures} <= {threshold} (g = {genus})")]
    Proviso {
        genus: u32,
        punctures: u32,
        threshold: i64,
    },

    #[error("empty certificate: {0}")]
    EmptyCertificate(String),

    #[error("word matrix is not primitive within {cap} powers")]
    NotPrimitive { cap: usize },

    #[error("power iteration did not converge in {iterations} iterations (last residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("no {kind} named `{name}` (known: {known})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        known: String,
    },

    #[error("{path}: {message}")]
    Config { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    ///
    /// 0 success, 2 validation, 3 empty certificate, 4 spectral precondition,
    /// 5 proviso violation, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Complexity { .. }
            | Error::Structure(_)
            | Error::UnknownCurve(_)
            | Error::Validation(_)
            | Error::Precondition(_)
            | Error::Config { .. }
            | Error::Json(_) => 2,
            Error::EmptyCertificate(_) => 3,
            Error::NotPrimitive { .. } => 4,
            Error::Proviso { .. } => 5,
            Error::NoConvergence { .. }
            | Error::UnknownStrategy { .. }
            | Error::Io(_)
            | Error::Csv(_) => 1,
        }
    }
}
