//! Precision-parameterized complex arithmetic, special functions and
//! quadrature primitives shared by all modules.

mod gamma;
mod quad;
mod series;

pub use gamma::upper_incomplete_gamma;
pub use quad::{adaptive_simpson, gauss_legendre, integrate_gl};
pub use series::{series_sum, KahanSum, SeriesSum};

use crate::error::{Error, Result};

/// Working-precision knobs threaded through every numerical routine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionConfig {
    /// Requested significant digits (informational floor; f64 backs all
    /// arithmetic, so values above 16 are clamped by the representation).
    pub sig_digits: u32,
    /// Relative cutoff for series tails.
    pub trunc_eps: f64,
    /// Per-axis quadrature resolution.
    pub quad_points: usize,
}

impl PrecisionConfig {
    pub fn new(sig_digits: u32, trunc_eps: f64, quad_points: usize) -> Result<Self> {
        if sig_digits < 15 {
            return Err(Error::InvalidArgument(format!(
                "sig_digits must be >= 15, got {sig_digits}"
            )));
        }
        if !(trunc_eps > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "trunc_eps must be positive, got {trunc_eps}"
            )));
        }
        if quad_points < 16 {
            return Err(Error::InvalidArgument(format!(
                "quad_points must be >= 16, got {quad_points}"
            )));
        }
        Ok(Self { sig_digits, trunc_eps, quad_points })
    }

    /// Override fields from `JPERIOD_SIG_DIGITS`, `JPERIOD_TRUNC_EPS` and
    /// `JPERIOD_QUAD_POINTS` when set.
    pub fn from_env() -> Result<Self> {
        let d = Self::default();
        let sig_digits = read_env("JPERIOD_SIG_DIGITS")?.unwrap_or(d.sig_digits);
        let trunc_eps = read_env("JPERIOD_TRUNC_EPS")?.unwrap_or(d.trunc_eps);
        let quad_points = read_env("JPERIOD_QUAD_POINTS")?.unwrap_or(d.quad_points);
        Self::new(sig_digits, trunc_eps, quad_points)
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self { sig_digits: 15, trunc_eps: 1e-18, quad_points: 200 }
    }
}

fn read_env<T: std::str::FromStr>(name: &str) -> Result<Option<T>> {
    match std::env::var(name) {
        Ok(s) => s
            .trim()
            .parse::<T>()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("cannot parse {name}={s}"))),
        Err(_) => Ok(None),
    }
}
