//! Special-function kernels.
//!
//! Everything here is pure `f64` code. The extended-precision references the
//! tests compare against live in [`crate::oracle::highprec`].

mod dawson;
mod gamma;
mod hypergeometric;
mod jacobi;

pub use dawson::{dawson, dawson_with, erfi, erfi_scaled, erfi_with};
pub use gamma::ln_gamma;
pub use hypergeometric::{kummer_1f1, kummer_1f1_with, kummer_series};
pub use jacobi::{jacobi, jacobi_all};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("{func}: argument outside domain ({reason})")]
    Domain { func: &'static str, reason: String },
    #[error("{func}: no convergence after {terms} terms")]
    Convergence { func: &'static str, terms: usize },
    #[error("{func}: result overflows f64 at x = {arg}")]
    Range { func: &'static str, arg: f64 },
}

/// Stopping rule for series and continued fractions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accuracy {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Accuracy {
    pub fn new(abs_tol: f64, rel_tol: f64, max_terms: usize) -> Result<Self, SpecfunError> {
        if !(abs_tol > 0.0 && rel_tol > 0.0 && max_terms >= 1) {
            return Err(SpecfunError::Domain {
                func: "Accuracy::new",
                reason: format!(
                    "need abs_tol > 0, rel_tol > 0, max_terms >= 1 (got {abs_tol}, {rel_tol}, {max_terms})"
                ),
            });
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_terms,
        })
    }

    /// True once the remaining tail is below both tolerances.
    pub(crate) fn converged(&self, tail: f64, sum: f64) -> bool {
        tail <= self.abs_tol.max(self.rel_tol * sum.abs())
    }
}

impl Default for Accuracy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 1e-12,
            max_terms: 10_000,
        }
    }
}

/// Returns `Some(n)` when `x == -n` for a non-negative integer `n`.
pub(crate) fn nonpositive_integer(x: f64) -> Option<u64> {
    if x <= 0.0 && x.fract() == 0.0 && x > -(u32::MAX as f64) {
        Some((-x) as u64)
    } else {
        None
    }
}
