//! Residual of the transformed radial equation
//!
//! ```text
//! ρ²Ψ'' + ρΨ' + (2ξ²/α²) ρ Ψ − (η²/α²) ρ² Ψ − (W/α²) Ψ = 0,
//! ```
//!
//! evaluated in t = ln ρ, where ρ²Ψ'' + ρΨ' = d²Ψ/dt².

use super::OracleError;
use crate::spectrum::{HypergeometricArgument, RadialWavefunction, SpectralParams};

/// Step in t = ln ρ for the eighth-order second difference.
const T_STEP: f64 = 2e-3;

const D2_CENTER: f64 = -205.0 / 72.0;
const D2: [f64; 4] = [8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0];

/// max |L Ψ| / max |Ψ| over `grid`, for any Ψ and W.
pub fn residual_of(
    sp: &SpectralParams,
    w: f64,
    psi: impl Fn(f64) -> Result<f64, OracleError>,
    grid: &[f64],
) -> Result<f64, OracleError> {
    let alpha2 = sp.molecule.alpha * sp.molecule.alpha;
    let linear = 2.0 * sp.xi_sq / alpha2;
    let quadratic = sp.eta_sq() / alpha2;
    let constant = w / alpha2;
    let mut worst: f64 = 0.0;
    let mut peak: f64 = 0.0;
    for &rho in grid {
        if !(rho > 0.0) {
            return Err(OracleError::Domain(format!("grid point rho = {rho} is not positive")));
        }
        let t = rho.ln();
        let at = |k: f64| psi((t + k * T_STEP).exp());
        let v = at(0.0)?;
        let mut d2 = D2_CENTER * v;
        for (k, w) in D2.iter().enumerate() {
            let s = (k + 1) as f64;
            d2 += w * (at(s)? + at(-s)?);
        }
        d2 /= T_STEP * T_STEP;
        let lhs = d2 + linear * rho * v - quadratic * rho * rho * v - constant * v;
        worst = worst.max(lhs.abs());
        peak = peak.max(v.abs());
    }
    Ok(if peak == 0.0 { worst } else { worst / peak })
}

/// Residual of the level-n radial function built with `arg`.
pub fn ode_residual(
    sp: &SpectralParams,
    n: u32,
    arg: HypergeometricArgument,
    grid: &[f64],
) -> Result<f64, OracleError> {
    let psi = RadialWavefunction::new(sp, n, arg).map_err(|e| OracleError::Domain(e.to_string()))?;
    let w = sp.w_of_energy(sp.energy_cm(n));
    residual_of(
        sp,
        w,
        |r| psi.eval(r).map_err(|e| OracleError::Domain(e.to_string())),
        grid,
    )
}

/// `count` points evenly spaced strictly inside (0, ρ_max) of the level-n function.
pub fn interior_grid(sp: &SpectralParams, n: u32, count: usize) -> Result<Vec<f64>, OracleError> {
    let psi = RadialWavefunction::new(sp, n, HypergeometricArgument::TwoGamma)
        .map_err(|e| OracleError::Domain(e.to_string()))?;
    let top = psi.rho_max() * (-8.0 * T_STEP).exp();
    Ok((1..=count).map(|i| top * i as f64 / (count + 1) as f64).collect())
}
