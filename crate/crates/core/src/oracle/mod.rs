//! Independent verifiers.
//!
//! - [`eigen`]: finite-difference eigensolver for the radial equation, with
//!   either the Pekeris or the exact centrifugal term.
//! - [`ode`]: residual of the transformed radial equation for the analytic Ψ.
//! - [`highprec`]: 256-bit series references for the special functions.

pub mod eigen;
pub mod highprec;
pub mod ode;

use thiserror::Error;

pub use eigen::{
    harmonic_self_test, pekeris_error, radial_eigensolve, radial_eigensolve_adaptive, Centrifugal, Discretization,
};
pub use ode::{interior_grid, ode_residual};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("{0}")]
    Domain(String),
    #[error("{func}: no convergence after {terms} steps")]
    Convergence { func: &'static str, terms: usize },
    #[error("box too small: eigenvector amplitude {amplitude:e} at the boundary (chi_max = {chi_max})")]
    BoxTooSmall { chi_max: f64, amplitude: f64 },
}

/// A special-function value to reproduce in extended precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reference {
    Jacobi { n: u32, a: f64, b: f64, x: f64 },
    Kummer { a: f64, b: f64, z: f64 },
    Erfi { x: f64 },
    Dawson { x: f64 },
    LnGamma { x: f64 },
}

pub fn highprec_reference(r: Reference) -> Result<f64, OracleError> {
    match r {
        Reference::Jacobi { n, a, b, x } => highprec::jacobi(n, a, b, x),
        Reference::Kummer { a, b, z } => highprec::kummer_1f1(a, b, z),
        Reference::Erfi { x } => highprec::erfi(x),
        Reference::Dawson { x } => highprec::dawson(x),
        Reference::LnGamma { x } => highprec::ln_gamma(x),
    }
}
