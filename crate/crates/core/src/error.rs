use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("vector is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    /// All eigenvalues coincide; the trigonometric form has no angle.
    #[error("degenerate input: every eigenvalue equals {value}")]
    Degenerate { value: f64 },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("cubic has complex roots (B^2 - 4A^3 = {excess:e})")]
    Domain { excess: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent routes disagreed beyond tolerance.
    #[error("contract violation: {0}")]
    Contract(String),
}
