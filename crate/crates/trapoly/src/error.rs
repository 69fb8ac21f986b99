use thiserror::Error;

/// Error taxonomy shared by all modules.
///
/// The CLI maps these onto exit codes: `Parameter`, `Domain` and `Mapping`
/// are usage errors (2), `Breakdown` and `Convergence` are numeric
/// breakdowns (3), `Fit` is a fit failure (4).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid parameter set (violated type invariant or precondition).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Three-term recursion or matrix construction broke down at a specific order.
    #[error("numeric breakdown at order {order}: {message}")]
    Breakdown { order: usize, message: String },

    /// Iterative solve exceeded its budget.
    #[error("convergence failure at index {index}: {message}")]
    Convergence { index: usize, message: String },

    /// Least-squares / envelope extraction failed.
    #[error("fit error: {0}")]
    Fit(String),

    /// Potential-to-polynomial parameter map violated a reality condition.
    #[error("mapping error: {0}")]
    Mapping(String),
}

pub type Result<T> = std::result::Result<T, Error>;
