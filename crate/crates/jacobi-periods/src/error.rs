//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are split between validation failures (bad arguments, shape
/// mismatches) and numerical failures (non-convergence, verification
/// residuals out of tolerance). The CLI maps the former to exit code 1 and
/// the latter to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("series did not converge within {max_terms} terms")]
    NonConvergent { max_terms: usize },

    #[error("degenerate point: c*tau + d vanished within working precision")]
    DegeneratePoint,

    #[error("multiplier value {value} is not within {tol} of any 48th root of unity")]
    SnapFailure { value: num_complex::Complex64, tol: f64 },

    #[error("element is not an upper-triangular generator of the translation subgroup")]
    NotParabolic,

    #[error("action matrix failed the sample-point check: relative error {residual:.3e}")]
    VerificationFailure { residual: f64 },

    #[error("slash weight mismatch: expected twice-weight {expected}, got {got}")]
    WeightMismatch { expected: i32, got: i32 },

    #[error("operands have different shape (k, m): {0}")]
    ShapeMismatch(String),

    #[error("multiplier eta-power {idx} is not admissible for twice-weight {twice_weight}")]
    InadmissibleMultiplier { idx: u8, twice_weight: i32 },

    #[error("singular value {sigma:.3e} lies within a factor 10 of the nullspace threshold {threshold:.3e}")]
    RankAmbiguous { sigma: f64, threshold: f64 },

    #[error("coset tables do not match")]
    TableMismatch,

    #[error("quadrature did not converge: doubling the resolution moved the result by {rel:.3e}")]
    QuadratureNotConverged { rel: f64 },

    #[error("missing coset data for representative {0}")]
    MissingCoset(String),

    #[error("unsupported group element for this operation: {0}")]
    UnsupportedElement(String),

    #[error("finite-difference stencil leaves the upper half-plane (Im tau = {imag}, reach = {reach})")]
    StencilOutOfDomain { imag: f64, reach: f64 },
}

impl Error {
    /// True for errors that signal a numerical failure rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergent { .. }
                | Error::SnapFailure { .. }
                | Error::VerificationFailure { .. }
                | Error::RankAmbiguous { .. }
                | Error::QuadratureNotConverged { .. }
                | Error::StencilOutOfDomain { .. }
                | Error::DegeneratePoint
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
