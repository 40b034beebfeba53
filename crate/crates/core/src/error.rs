use thiserror::Error;

/// Errors produced by the solver library.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Physical parameters that do not produce a confining radial potential.
    #[error("non-confining parameters: {0}")]
    NonConfining(String),

    /// The basis scale makes the coupling vanish: the matrix is exactly
    /// diagonal and the three-term recursion cannot advance.
    #[error("degenerate coupling: {0}")]
    DegenerateCoupling(String),

    /// A numerical routine failed its own convergence or sanity check.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
