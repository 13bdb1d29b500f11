//! Pekeris-approximated radial problem.
//!
//! With χ = (r − r_e)/r_e and all energies measured in units of the kinetic
//! prefactor P = ħ²/(2M r_e²), the radial equation reads
//!
//! ```text
//! −Ψ'' + [A/(1+χ)² + (D/P)(e^{−2αχ} − 2e^{−αχ})] Ψ = (E/P) Ψ,   A = ϖ² + μ(μ+1).
//! ```
//!
//! Replacing 1/(1+χ)² by C₀ + C₁e^{−αχ} + C₂e^{−2αχ} makes the problem exactly
//! solvable. With ξ² = D/P − C₁A/2, η² = D/P + C₂A and K = ξ²/(ηα) the levels are
//!
//! ```text
//! E_n = P [A C₀ − α² (n + ½ − K)²].
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::angular::{polar_eigenvalue, AngularError, DunklParams, HalfInt};
use crate::quadrature::{integrate, QuadOptions, QuadratureError};
use crate::specfun::{kummer_1f1, SpecfunError};
use crate::units::cm_to_ev;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("{0}")]
    Domain(String),
    #[error("eta^2 = {eta_sq} <= 0: configuration is unphysical")]
    Unphysical { eta_sq: f64 },
    #[error("xi^2 = {xi_sq} <= 0: the effective well does not bind")]
    NoBinding { xi_sq: f64 },
    #[error("n = {n} lies outside the admissible window {}", show_window(.window))]
    OutOfWindow { n: u32, window: Option<(u32, u32)> },
    #[error("n = {n} is not a bound state (bound levels: {count})")]
    NotBound { n: u32, count: u32 },
    #[error(transparent)]
    Angular(#[from] AngularError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

fn show_window(w: &Option<(u32, u32)>) -> String {
    match w {
        Some((lo, hi)) => format!("[{lo}, {hi}]"),
        None => "(empty)".into(),
    }
}

fn domain<T>(msg: impl Into<String>) -> Result<T, SpectrumError> {
    Err(SpectrumError::Domain(msg.into()))
}

/// Spectroscopic constants of a diatomic molecule. `prefactor` and `depth`
/// are in cm⁻¹, `alpha` is dimensionless.
#[derive(Debug, Clone, PartialEq)]
pub struct Molecule {
    pub name: String,
    pub prefactor: f64,
    pub depth: f64,
    pub alpha: f64,
}

impl Molecule {
    pub fn new(name: impl Into<String>, prefactor: f64, depth: f64, alpha: f64) -> Result<Self, SpectrumError> {
        for (label, v) in [("P", prefactor), ("D", depth), ("alpha", alpha)] {
            if !(v.is_finite() && v > 0.0) {
                return domain(format!("molecule constant {label} = {v} must be positive"));
            }
        }
        Ok(Self {
            name: name.into(),
            prefactor,
            depth,
            alpha,
        })
    }

    /// D/P.
    pub fn depth_ratio(&self) -> f64 {
        self.depth / self.prefactor
    }
}

/// Which Pekeris coefficient set to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PekerisVariant {
    /// C₁ = 4/α + 6/α².
    Paper,
    /// C₁ = 4/α − 6/α², the second-order Taylor match of (1+χ)⁻² at χ = 0.
    TaylorMatched,
    /// C₁ as in `Paper` with C₂ halved; this set reproduces the published
    /// energy tables.
    Tabulated,
}

impl PekerisVariant {
    pub const ALL: [PekerisVariant; 3] = [
        PekerisVariant::Paper,
        PekerisVariant::TaylorMatched,
        PekerisVariant::Tabulated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PekerisVariant::Paper => "paper",
            PekerisVariant::TaylorMatched => "taylor",
            PekerisVariant::Tabulated => "tabulated",
        }
    }
}

impl fmt::Display for PekerisVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PekerisVariant {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" => Ok(PekerisVariant::Paper),
            "taylor" | "taylor_matched" | "taylor-matched" => Ok(PekerisVariant::TaylorMatched),
            "tabulated" => Ok(PekerisVariant::Tabulated),
            other => domain(format!(
                "unknown Pekeris variant '{other}' (expected paper, taylor or tabulated)"
            )),
        }
    }
}

/// 1/(1+χ)² ≈ C₀ + C₁e^{−αχ} + C₂e^{−2αχ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PekerisCoeffs {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub variant: PekerisVariant,
}

impl PekerisCoeffs {
    pub fn eval(&self, chi: f64, alpha: f64) -> f64 {
        let e = (-alpha * chi).exp();
        self.c0 + e * (self.c1 + self.c2 * e)
    }
}

pub fn pekeris_coefficients(alpha: f64, variant: PekerisVariant) -> Result<PekerisCoeffs, SpectrumError> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return domain(format!("alpha = {alpha} must be positive"));
    }
    let (u, u2) = (1.0 / alpha, 1.0 / (alpha * alpha));
    let c0 = 1.0 - 3.0 * u + 3.0 * u2;
    let c2 = -u + 3.0 * u2;
    let (c1, c2) = match variant {
        PekerisVariant::Paper => (4.0 * u + 6.0 * u2, c2),
        PekerisVariant::TaylorMatched => (4.0 * u - 6.0 * u2, c2),
        PekerisVariant::Tabulated => (4.0 * u + 6.0 * u2, 0.5 * c2),
    };
    Ok(PekerisCoeffs { c0, c1, c2, variant })
}

/// A = ϖ² + μ(μ+1) for the angular state (ℓ, m).
pub fn combined_angular(ell: HalfInt, m: HalfInt, p: &DunklParams) -> f64 {
    polar_eigenvalue(ell, m, p) + p.mu_term()
}

/// Derived constants of one (molecule, A, variant) configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralParams {
    pub molecule: Molecule,
    pub coeffs: PekerisCoeffs,
    /// ϖ² + μ(μ+1), or μ(μ+1) alone for the vibrational problem.
    pub a: f64,
    pub xi_sq: f64,
    pub eta: f64,
    /// η/α.
    pub gamma: f64,
}

pub fn spectral_params(mol: &Molecule, a: f64, variant: PekerisVariant) -> Result<SpectralParams, SpectrumError> {
    if !a.is_finite() {
        return domain(format!("angular coefficient A = {a} is not finite"));
    }
    let coeffs = pekeris_coefficients(mol.alpha, variant)?;
    let dp = mol.depth_ratio();
    let xi_sq = dp - 0.5 * coeffs.c1 * a;
    let eta_sq = dp + coeffs.c2 * a;
    if !(eta_sq > 0.0) {
        return Err(SpectrumError::Unphysical { eta_sq });
    }
    if !(xi_sq > 0.0) {
        return Err(SpectrumError::NoBinding { xi_sq });
    }
    let eta = eta_sq.sqrt();
    Ok(SpectralParams {
        molecule: mol.clone(),
        coeffs,
        a,
        xi_sq,
        eta,
        gamma: eta / mol.alpha,
    })
}

impl SpectralParams {
    /// Spectral parameters of the angular state (ℓ, m) under deformation `p`.
    pub fn for_state(
        mol: &Molecule,
        p: &DunklParams,
        ell: HalfInt,
        m: HalfInt,
        variant: PekerisVariant,
    ) -> Result<Self, SpectrumError> {
        spectral_params(mol, combined_angular(ell, m, p), variant)
    }

    pub fn eta_sq(&self) -> f64 {
        self.eta * self.eta
    }

    /// K = ξ²/(ηα).
    pub fn k(&self) -> f64 {
        self.xi_sq / (self.eta * self.molecule.alpha)
    }

    /// A·C₀, the large-χ limit of the effective potential in units of P.
    pub fn asymptote(&self) -> f64 {
        self.a * self.coeffs.c0
    }

    /// W = A C₀ − E/P for an energy in cm⁻¹.
    pub fn w_of_energy(&self, e_cm: f64) -> f64 {
        self.asymptote() - e_cm / self.molecule.prefactor
    }

    /// E_n in cm⁻¹, for any n.
    pub fn energy_cm(&self, n: u32) -> f64 {
        let alpha = self.molecule.alpha;
        let x = n as f64 + 0.5 - self.k();
        self.molecule.prefactor * (self.asymptote() - alpha * alpha * x * x)
    }

    /// β = √W/α at the level-n energy, i.e. |n + ½ − K|.
    pub fn beta_exp(&self, n: u32) -> f64 {
        (n as f64 + 0.5 - self.k()).abs()
    }

    /// Number of levels with n < K − ½, the ones whose radial function
    /// decays at ρ → 0 (β = K − ½ − n > 0).
    pub fn bound_levels(&self) -> u32 {
        let top = self.k() - 0.5;
        if top <= 0.0 {
            0
        } else {
            top.ceil() as u32
        }
    }

    /// ½ − ξ²/(γα²) + β + n for the level-n energy; zero for bound levels.
    pub fn quantization_residual(&self, n: u32) -> f64 {
        let alpha = self.molecule.alpha;
        0.5 - self.xi_sq / (self.gamma * alpha * alpha) + self.beta_exp(n) + n as f64
    }

    /// The real band [K − √(AC₀)/α − ½, K + √(AC₀)/α − ½].
    pub fn window(&self) -> Result<BoundWindow, SpectrumError> {
        let ac0 = self.asymptote();
        if ac0 < 0.0 {
            return domain(format!("A*C0 = {ac0} < 0: window undefined"));
        }
        let half = ac0.sqrt() / self.molecule.alpha;
        let centre = self.k() - 0.5;
        Ok(BoundWindow {
            lower: centre - half,
            upper: centre + half,
        })
    }
}

/// The band of n allowed by the window condition, before and after
/// intersecting with ℕ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundWindow {
    pub lower: f64,
    pub upper: f64,
}

impl BoundWindow {
    /// Integers in [max(lower, 0), upper], if any.
    pub fn integers(&self) -> Option<(u32, u32)> {
        let lo = self.lower.max(0.0).ceil();
        let hi = self.upper.floor();
        if hi < lo || hi < 0.0 || hi > u32::MAX as f64 {
            None
        } else {
            Some((lo as u32, hi as u32))
        }
    }

    pub fn contains(&self, n: u32) -> bool {
        self.integers().is_some_and(|(lo, hi)| (lo..=hi).contains(&n))
    }
}

pub fn bound_state_range(
    mol: &Molecule,
    p: &DunklParams,
    ell: HalfInt,
    m: HalfInt,
    variant: PekerisVariant,
) -> Result<Option<(u32, u32)>, SpectrumError> {
    Ok(SpectralParams::for_state(mol, p, ell, m, variant)?.window()?.integers())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub ell: HalfInt,
    pub m: HalfInt,
    pub e_cm: f64,
    pub e_ev: f64,
    /// Whether n lies in the integer window of [`SpectralParams::window`].
    pub in_window: bool,
    /// Whether n < K − ½.
    pub bound: bool,
}

/// Level energy for any n, tagged with its window and binding status.
pub fn energy(
    mol: &Molecule,
    p: &DunklParams,
    n: u32,
    ell: HalfInt,
    m: HalfInt,
    variant: PekerisVariant,
) -> Result<EnergyLevel, SpectrumError> {
    let sp = SpectralParams::for_state(mol, p, ell, m, variant)?;
    level(&sp, n, ell, m)
}

/// As [`energy`], but rejects n outside the window.
pub fn energy_in_window(
    mol: &Molecule,
    p: &DunklParams,
    n: u32,
    ell: HalfInt,
    m: HalfInt,
    variant: PekerisVariant,
) -> Result<EnergyLevel, SpectrumError> {
    let lvl = energy(mol, p, n, ell, m, variant)?;
    if !lvl.in_window {
        let sp = SpectralParams::for_state(mol, p, ell, m, variant)?;
        return Err(SpectrumError::OutOfWindow {
            n,
            window: sp.window()?.integers(),
        });
    }
    Ok(lvl)
}

pub fn level(sp: &SpectralParams, n: u32, ell: HalfInt, m: HalfInt) -> Result<EnergyLevel, SpectrumError> {
    let e_cm = sp.energy_cm(n);
    Ok(EnergyLevel {
        n,
        ell,
        m,
        e_cm,
        e_ev: cm_to_ev(e_cm),
        in_window: sp.window()?.contains(n),
        bound: n < sp.bound_levels(),
    })
}

/// Rotating Morse oscillator energy in the Pekeris approximation, written as a
/// shifted Morse oscillator with term values.
///
/// The effective potential (D/P + c₂L)e^{−2αχ} − 2(D/P − c₁L/2)e^{−αχ} + c₀L,
/// with L the centrifugal strength l(l+1), is a Morse well of depth
/// D* = (D/P − c₁L/2)²/(D/P + c₂L) sitting at c₀L − D*. Its levels are
/// c₀L − D* + ωₑ(n+½) − ωₑxₑ(n+½)² with ωₑ = 2α√D* and ωₑxₑ = α², in units of P.
pub fn standard_morse_pekeris(mol: &Molecule, centrifugal: f64, n: u32, c: &PekerisCoeffs) -> f64 {
    let dp = mol.depth / mol.prefactor;
    let attractive = dp - c.c1 * centrifugal / 2.0;
    let repulsive = dp + c.c2 * centrifugal;
    let d_star = attractive * attractive / repulsive;
    let we = 2.0 * mol.alpha * d_star.sqrt();
    let wexe = mol.alpha * mol.alpha;
    let v = n as f64 + 0.5;
    mol.prefactor * (c.c0 * centrifugal - d_star + we * v - wexe * v * v)
}

/// Which argument the confluent hypergeometric factor of Ψ takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypergeometricArgument {
    /// 2γρ = 2ηρ/α, the one that solves the transformed equation.
    TwoGamma,
    /// αρ/(2η), kept for comparison.
    AlphaOverTwoEta,
}

/// Ψ(ρ) = 𝒩 ρ^β e^{−γρ} ₁F₁(−n; 1 + 2β; zρ), ρ = e^{−αχ} ∈ (0, e^α),
/// normalised to ∫|Ψ|² dρ/(αρ) = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialWavefunction {
    pub n: u32,
    pub beta: f64,
    pub gamma: f64,
    /// z in ₁F₁(−n; 1 + 2β; zρ).
    pub scale: f64,
    ln_norm: f64,
    rho_max: f64,
}

impl RadialWavefunction {
    pub fn new(sp: &SpectralParams, n: u32, arg: HypergeometricArgument) -> Result<Self, SpectrumError> {
        let count = sp.bound_levels();
        if n >= count {
            return Err(SpectrumError::NotBound { n, count });
        }
        let alpha = sp.molecule.alpha;
        let beta = sp.beta_exp(n);
        let scale = match arg {
            HypergeometricArgument::TwoGamma => 2.0 * sp.gamma,
            HypergeometricArgument::AlphaOverTwoEta => alpha / (2.0 * sp.eta),
        };
        // past this point ρ^{2β} e^{−2γρ} has dropped far below the f64 range
        // relative to its peak at β/γ, whatever the polynomial factor does
        let tail = (2.0 * (beta + n as f64 + 1.0) + 800.0) / sp.gamma;
        let rho_max = if alpha < 700.0 { alpha.exp().min(tail) } else { tail };
        let mut psi = Self {
            n,
            beta,
            gamma: sp.gamma,
            scale,
            ln_norm: 0.0,
            rho_max,
        };
        // normalise around the peak so the integrand stays O(1)
        let peak = (beta / sp.gamma).min(rho_max);
        psi.ln_norm = -(beta * peak.ln() - sp.gamma * peak);
        let opts = QuadOptions::default();
        let mut failure = None;
        let norm = integrate(
            |rho, _, _| match psi.eval(rho) {
                Ok(v) => v * v / (alpha * rho),
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            },
            0.0,
            rho_max,
            &opts,
        )?;
        if let Some(e) = failure {
            return Err(e);
        }
        psi.ln_norm -= 0.5 * norm.value.ln();
        Ok(psi)
    }

    /// Upper end of the ρ interval used for normalisation.
    pub fn rho_max(&self) -> f64 {
        self.rho_max
    }

    pub fn eval(&self, rho: f64) -> Result<f64, SpectrumError> {
        if rho <= 0.0 {
            return Ok(0.0);
        }
        let f = kummer_1f1(-(self.n as f64), 1.0 + 2.0 * self.beta, self.scale * rho)?;
        Ok((self.ln_norm + self.beta * rho.ln() - self.gamma * rho).exp() * f)
    }
}

pub fn radial_wavefunction(sp: &SpectralParams, n: u32, rho_grid: &[f64]) -> Result<Vec<f64>, SpectrumError> {
    let psi = RadialWavefunction::new(sp, n, HypergeometricArgument::TwoGamma)?;
    rho_grid.iter().map(|&r| psi.eval(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h2() -> Molecule {
        Molecule::new("H2", 60.8296, 38292.0, 1.440).unwrap()
    }

    fn hcl() -> Molecule {
        Molecule::new("HCl", 10.5930, 17244.0, 2.380).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let c = pekeris_coefficients(1.44, PekerisVariant::Paper).unwrap();
        assert!((c.c0 - 0.363426).abs() < 1e-6);
        assert!((c.c1 - 5.671296).abs() < 1e-6);
        assert!((c.c2 - 0.752315).abs() < 1e-6);
        let t = pekeris_coefficients(1.44, PekerisVariant::TaylorMatched).unwrap();
        assert!((t.c1 + 0.115741).abs() < 1e-6);
        assert_eq!((t.c0, t.c2), (c.c0, c.c2));
        let big = pekeris_coefficients(1e6, PekerisVariant::Paper).unwrap();
        assert!((big.c0 - 1.0).abs() < 1e-5 && big.c1.abs() < 1e-5 && big.c2.abs() < 1e-5);
        assert!(pekeris_coefficients(0.0, PekerisVariant::Paper).is_err());
    }

    #[test]
    fn taylor_variant_matches_expansion() {
        for alpha in [0.7, 1.44, 2.38, 10.0] {
            let c = pekeris_coefficients(alpha, PekerisVariant::TaylorMatched).unwrap();
            assert!((c.c0 + c.c1 + c.c2 - 1.0).abs() < 1e-12);
            assert!((c.c1 + 2.0 * c.c2 - 2.0 / alpha).abs() < 1e-12);
            assert!((c.c1 / 2.0 + 2.0 * c.c2 - 3.0 / (alpha * alpha)).abs() < 1e-12);
        }
    }

    #[test]
    fn h2_spectral_example() {
        let p = DunklParams::uniform(-0.4).unwrap();
        let one = HalfInt::int(1);
        let a = combined_angular(one, one, &p);
        assert!((a - 10.64).abs() < 1e-12);
        let sp = spectral_params(&h2(), a, PekerisVariant::Paper).unwrap();
        assert!((sp.xi_sq - 599.324_870_04).abs() < 1e-7);
        assert!((sp.eta - 25.248_778_11).abs() < 1e-7);
        let s = spectral_params(&h2(), 0.0, PekerisVariant::Paper).unwrap();
        assert_eq!(s.xi_sq, h2().depth_ratio());
        assert!((s.eta_sq() / h2().depth_ratio() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unphysical_configurations() {
        let mol = Molecule::new("x", 1.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            spectral_params(&mol, 100.0, PekerisVariant::Paper),
            Err(SpectrumError::NoBinding { .. })
        ));
        let mol = Molecule::new("y", 1.0, 1.0, 0.2).unwrap();
        // C₂ = −5 + 75 > 0 here; a negative A drives η² below zero
        assert!(matches!(
            spectral_params(&mol, -1.0, PekerisVariant::Paper),
            Err(SpectrumError::Unphysical { .. }) | Err(SpectrumError::NoBinding { .. })
        ));
        assert!(Molecule::new("z", -1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn published_ground_levels_with_tabulated_set() {
        let one = HalfInt::int(1);
        let minus = DunklParams::uniform(-0.4).unwrap();
        let plus = DunklParams::uniform(0.4).unwrap();
        let i2 = Molecule::new("I2", 0.0374, 12550.0, 4954.0).unwrap();
        for (mol, p, want) in [(h2(), minus, -3.99223), (h2(), plus, -3.08793), (i2, minus, -16.6989)] {
            let e = energy(&mol, &p, 0, one, one, PekerisVariant::Tabulated).unwrap();
            assert!((e.e_ev / want - 1.0).abs() < 1e-4, "{} {}", e.e_ev, want);
        }
    }

    #[test]
    fn quantization_condition_holds_for_bound_levels() {
        let p = DunklParams::uniform(0.4).unwrap();
        for mol in [h2(), hcl()] {
            let sp =
                SpectralParams::for_state(&mol, &p, HalfInt::int(1), HalfInt::int(1), PekerisVariant::Paper).unwrap();
            let alpha = mol.alpha;
            assert!((sp.gamma * alpha * alpha - sp.eta * alpha).abs() < 1e-10 * sp.eta * alpha);
            assert!(sp.bound_levels() > 5);
            for n in 0..sp.bound_levels() {
                assert!(sp.quantization_residual(n).abs() < 1e-10);
                let w = sp.w_of_energy(sp.energy_cm(n));
                assert!((w.sqrt() / alpha - sp.beta_exp(n)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn window_is_where_energy_is_non_negative() {
        let p = DunklParams::uniform(-0.4).unwrap();
        let one = HalfInt::int(1);
        let sp = SpectralParams::for_state(&h2(), &p, one, one, PekerisVariant::Paper).unwrap();
        let (lo, hi) = sp.window().unwrap().integers().unwrap();
        assert_eq!((lo, hi), (15, 17));
        for n in 0..30 {
            assert_eq!(sp.energy_cm(n) >= 0.0, (lo..=hi).contains(&n), "n = {n}");
        }
        let s0 = spectral_params(&h2(), 0.0, PekerisVariant::Paper).unwrap();
        let w = s0.window().unwrap();
        assert_eq!(w.lower, w.upper);
        assert!(energy_in_window(&h2(), &p, 0, one, one, PekerisVariant::Paper).is_err());
        assert!(energy_in_window(&h2(), &p, 16, one, one, PekerisVariant::Paper).is_ok());
    }

    #[test]
    fn deeper_well_lowers_levels() {
        let p = DunklParams::uniform(0.2).unwrap();
        let one = HalfInt::int(1);
        for n in [0, 3, 8] {
            let mut last = f64::INFINITY;
            for d in [20000.0, 30000.0, 38292.0, 50000.0] {
                let mol = Molecule::new("H2", 60.8296, d, 1.44).unwrap();
                let e = energy(&mol, &p, n, one, one, PekerisVariant::Paper).unwrap().e_cm;
                assert!(e < last);
                last = e;
            }
        }
    }

    #[test]
    fn undeformed_reduction() {
        let p = DunklParams::undeformed();
        for mol in [h2(), hcl()] {
            for tl in 0..=6 {
                let ell = HalfInt::from_twice(tl);
                let m = HalfInt::ZERO;
                let big_l = 2.0 * ell.value();
                let c = pekeris_coefficients(mol.alpha, PekerisVariant::Paper).unwrap();
                for n in 0..=10 {
                    let e = energy(&mol, &p, n, ell, m, PekerisVariant::Paper).unwrap().e_cm;
                    let r = standard_morse_pekeris(&mol, big_l * (big_l + 1.0), n, &c);
                    assert!((e / r - 1.0).abs() < 1e-10, "{e} {r}");
                }
            }
        }
    }

    #[test]
    fn wavefunction_ground_state_is_nodeless_and_normalised() {
        let p = DunklParams::uniform(-0.4).unwrap();
        let one = HalfInt::int(1);
        let sp = SpectralParams::for_state(&h2(), &p, one, one, PekerisVariant::Paper).unwrap();
        let psi = RadialWavefunction::new(&sp, 0, HypergeometricArgument::TwoGamma).unwrap();
        let alpha = sp.molecule.alpha;
        let norm = integrate(
            |r, _, _| psi.eval(r).unwrap().powi(2) / (alpha * r),
            0.0,
            psi.rho_max(),
            &QuadOptions::default(),
        )
        .unwrap();
        assert!((norm.value - 1.0).abs() < 1e-10);
        for k in 1..400 {
            let r = psi.rho_max() * k as f64 / 400.0;
            assert!(psi.eval(r).unwrap() > 0.0);
        }
        assert!(matches!(
            RadialWavefunction::new(&sp, sp.bound_levels(), HypergeometricArgument::TwoGamma),
            Err(SpectrumError::NotBound { .. })
        ));
    }

    #[test]
    fn variant_names_round_trip() {
        for v in PekerisVariant::ALL {
            assert_eq!(v.name().parse::<PekerisVariant>().unwrap(), v);
        }
        assert!("nope".parse::<PekerisVariant>().is_err());
    }
}
