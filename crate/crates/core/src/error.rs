use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("gamma evaluated within {margin:e} of a pole (x = {x})")]
    Pole { x: f64, margin: f64 },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("evaluation point {z} within {tol:e} of a solenoid center")]
    SingularPoint { z: Complex64, tol: f64 },

    #[error("boundary-data fit residual {residual:e} exceeds {limit:e}")]
    Extraction { residual: f64, limit: f64 },

    #[error("moment system degenerate (m = {m})")]
    DegenerateSystem { m: i64 },

    #[error("finite-difference step {step:e} outside [1e-6, 1e-1]")]
    Step { step: f64 },

    #[error("residual report requested for an empty basis")]
    EmptyBasis,

    #[error("invalid field configuration: {0}")]
    InvalidField(String),

    #[error("invalid extension parameters: {0}")]
    InvalidExtension(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
