//! Shell summation over symmetric integer ranges with compensated
//! accumulation.

use num_complex::Complex64;

use super::PrecisionConfig;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 1_000_000;

/// Kahan-compensated complex accumulator.
///
/// Used wherever determinism of floating sums matters (quadrature grids,
/// theta tails), so that reorderings at the shell level cannot move results
/// beyond the compensation error.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: Complex64,
    comp: Complex64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: Complex64) {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> Complex64 {
        self.sum
    }
}

/// Result of a shell summation: the value plus a tail estimate.
#[derive(Debug, Clone, Copy)]
pub struct SeriesSum {
    pub value: Complex64,
    pub error_estimate: f64,
}

/// Sum `term(n)` over n = 0, ±1, ±2, ... until the last full shell
/// {n, -n} contributes less than `trunc_eps` times the running magnitude
/// for two consecutive shells.
///
/// The caller guarantees geometric-or-faster decay; after `MAX_TERMS`
/// evaluations the sum is reported as non-convergent.
pub fn series_sum(cfg: &PrecisionConfig, term: impl Fn(i64) -> Complex64) -> Result<SeriesSum> {
    let mut acc = KahanSum::new();
    let mut consumed = 0usize;
    let mut quiet_shells = 0usize;
    let mut last_shell = 0.0f64;

    let mut shell = 0i64;
    loop {
        let shell_value = if shell == 0 {
            consumed += 1;
            term(0)
        } else {
            consumed += 2;
            term(shell) + term(-shell)
        };
        acc.add(shell_value);
        last_shell = shell_value.norm();

        let scale = acc.value().norm();
        if last_shell <= cfg.trunc_eps * scale {
            quiet_shells += 1;
            if quiet_shells >= 2 {
                break;
            }
        } else {
            quiet_shells = 0;
        }
        if consumed >= MAX_TERMS {
            return Err(Error::NonConvergent { max_terms: MAX_TERMS });
        }
        shell += 1;
    }

    Ok(SeriesSum {
        value: acc.value(),
        error_estimate: last_shell + cfg.trunc_eps * acc.value().norm(),
    })
}
