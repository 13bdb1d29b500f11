//! Unit conventions. Energies are carried in cm⁻¹ throughout, temperatures
//! in kelvin.

/// Wavenumbers per electron-volt (CODATA 2018: 1 eV = 8065.543937… cm⁻¹).
pub const CM_PER_EV: f64 = 8065.543937;

/// Boltzmann constant in cm⁻¹/K.
pub const K_B: f64 = 0.695_034_800;

pub fn cm_to_ev(e_cm: f64) -> f64 {
    e_cm / CM_PER_EV
}

/// Inverse temperature β = 1/(k_B T) in 1/cm⁻¹.
pub fn inverse_temperature(t_kelvin: f64) -> f64 {
    1.0 / (K_B * t_kelvin)
}
