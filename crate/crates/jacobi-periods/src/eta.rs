//! Numerical Dedekind eta and the eta-power multiplier systems chi_i on
//! SL2(Z).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::modgroup::GroupElement;
use crate::numerics::PrecisionConfig;

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Multiplier system chi_i(gamma) = eta^i(gamma tau) / ((c tau + d)^{i/2} eta^i(tau)),
/// attached to a half-integral (or integral) weight through `twice_weight`.
///
/// Admissibility follows the parity rule i = 2k (mod 4) for weight k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multiplier {
    idx: u8,
    twice_weight: i32,
}

impl Multiplier {
    /// Build chi_i for weight `twice_weight`/2, rejecting inadmissible pairs.
    pub fn new(idx: u32, twice_weight: i32) -> Result<Self> {
        let idx = (idx % 24) as u8;
        if (idx as i32 - twice_weight).rem_euclid(4) != 0 {
            return Err(Error::InadmissibleMultiplier { idx, twice_weight });
        }
        Ok(Self { idx, twice_weight })
    }

    /// The eta power i (mod 24).
    pub fn idx(&self) -> u8 {
        self.idx
    }

    pub fn twice_weight(&self) -> i32 {
        self.twice_weight
    }

    pub fn is_admissible_for(&self, twice_weight: i32) -> bool {
        (self.idx as i32 - twice_weight).rem_euclid(4) == 0
    }
}

/// Dedekind eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n), q = e^{2 pi i tau}.
pub fn eta(cfg: &PrecisionConfig, tau: Complex64) -> Result<Complex64> {
    let v = tau.im;
    if v < 1e-6 {
        // the product needs ~ln(eps)/(2 pi v) factors; below this the caller
        // should move tau by a group element first
        return Err(Error::NonConvergent { max_terms: 1_000_000 });
    }
    let q = (Complex64::new(0.0, TAU) * tau).exp();
    let mut out = (Complex64::new(0.0, TAU / 24.0) * tau).exp();
    let q_abs = (-TAU * v).exp();
    let n_max = (cfg.trunc_eps.ln() / q_abs.ln()).ceil() as usize + 2;
    let mut qn = Complex64::new(1.0, 0.0);
    for _ in 0..n_max {
        qn *= q;
        out *= Complex64::new(1.0, 0.0) - qn;
    }
    Ok(out)
}

/// chi_i(g), evaluated from the defining eta ratio at the probe point
/// tau0 = 2i and snapped to the nearest 48th root of unity.
///
/// The value is independent of the probe point by construction of a
/// multiplier system; the snap quantizes away float error. A value farther
/// than 1e-6 from every 48th root signals a branch-handling bug and is
/// reported as `SnapFailure`.
pub fn chi(cfg: &PrecisionConfig, mult: &Multiplier, g: &GroupElement) -> Result<Complex64> {
    let probe = Complex64::new(0.0, 2.0);
    let raw = chi_raw(cfg, mult, g, probe)?;
    snap_to_root_of_unity(raw, 48, 1e-6)
}

/// The defining ratio before snapping, at an arbitrary probe point.
pub fn chi_raw(
    cfg: &PrecisionConfig,
    mult: &Multiplier,
    g: &GroupElement,
    tau0: Complex64,
) -> Result<Complex64> {
    let num = eta(cfg, g.apply(tau0))?;
    let den = eta(cfg, tau0)?;
    let ratio = num / den;
    let idx = mult.idx as i32;
    // principal branch w^{i/2} = exp((i/2) Log w)
    let automorphy = g.automorphy_denominator(tau0).powf(idx as f64 / 2.0);
    Ok(ratio.powi(idx) / automorphy)
}

/// Snap a unit-modulus value to the nearest n-th root of unity.
pub fn snap_to_root_of_unity(value: Complex64, n: u32, tol: f64) -> Result<Complex64> {
    let step = TAU / n as f64;
    let k = (value.arg() / step).round().rem_euclid(n as f64);
    let snapped = Complex64::from_polar(1.0, k * step);
    if (value - snapped).norm() > tol {
        return Err(Error::SnapFailure { value, tol });
    }
    Ok(snapped)
}
