//! Dunkl-deformed Morse oscillator.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: ln Γ, Jacobi polynomials, Kummer's ₁F₁, Dawson and erfi.
//! - [`quadrature`]: tanh-sinh integration for endpoint-singular weights.
//! - [`angular`]: Dunkl deformation parameters, reflection parity sectors,
//!   separation constants and the six angular eigenfunction families.
//! - [`spectrum`]: Pekeris-approximated radial problem, closed-form energies
//!   and radial wavefunctions.
//! - [`thermo`]: vibrational partition function (closed form and direct sum)
//!   and the derived thermodynamic functions.
//! - [`oracle`]: brute-force verifiers (finite-difference eigensolver, ODE
//!   residuals, extended-precision special-function references).

// `!(x > 0.0)` is the NaN-rejecting guard used throughout
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod oracle;
pub mod quadrature;
pub mod specfun;
pub mod spectrum;
pub mod thermo;
pub mod units;

pub use angular::{AngularError, DunklParams, HalfInt, Parity, ParityLabels};
pub use spectrum::{EnergyLevel, Molecule, PekerisCoeffs, PekerisVariant, SpectralParams, SpectrumError};
pub use thermo::{PartitionMethod, ThermoError, ThermoParams, ThermoPoint};
