//! Vibrational thermodynamics.
//!
//! The vibrational ladder is the ℓ = m = 0 spectrum with A = μ(μ+1):
//! E_n = P[Q − α²(n + H)²] with Q = μ(μ+1)C₀, H = ½ − ξ₁²/(η₁α), and the sum runs
//! over n = 0..=⌊λ⌋ with λ = −H (the top of the parabola in n).
//!
//! Two partition functions are provided: the direct Boltzmann sum, and the
//! closed form obtained from the leading Euler–Maclaurin (Poisson) terms,
//!
//! ```text
//! Z = ½[e^{−βP(Q−α²H²)} − e^{−βP(Q−α²(λ+1+H)²)}]
//!     + √π e^{−βPQ} [erfi(x(H+λ+1)) − erfi(xH)] / (2x),     x = α√(βP).
//! ```
//!
//! Everything is carried as ln Z = −βE_ref + r(β) with E_ref a reference
//! energy, so that Z itself may over- or underflow without harm.

use thiserror::Error;

use crate::angular::DunklParams;
use crate::specfun::{dawson, SpecfunError};
use crate::spectrum::{spectral_params, Molecule, PekerisVariant, SpectrumError};
use crate::units::{inverse_temperature, K_B};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThermoError {
    #[error("{0}")]
    Domain(String),
    #[error("closed-form partition function is not positive at beta = {beta} (G = {value})")]
    Range { beta: f64, value: f64 },
    #[error("numerical derivative of ln Z did not converge at T = {t} K")]
    Differentiation { t: f64 },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, ThermoError> {
    Err(ThermoError::Domain(msg.into()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThermoParams {
    /// Kinetic prefactor P, cm⁻¹.
    pub prefactor: f64,
    pub alpha: f64,
    /// μ(μ+1)C₀, in units of P.
    pub q: f64,
    pub h: f64,
    /// λ = −H.
    pub lambda_max: f64,
    pub xi1_sq: f64,
    pub eta1: f64,
}

pub fn thermo_params(mol: &Molecule, p: &DunklParams, variant: PekerisVariant) -> Result<ThermoParams, ThermoError> {
    let sp = spectral_params(mol, p.mu_term(), variant)?;
    let h = 0.5 - sp.k();
    let tp = ThermoParams {
        prefactor: mol.prefactor,
        alpha: mol.alpha,
        q: sp.asymptote(),
        h,
        lambda_max: -h,
        xi1_sq: sp.xi_sq,
        eta1: sp.eta,
    };
    debug_assert_eq!(tp.h + tp.lambda_max + 1.0, 1.0);
    Ok(tp)
}

impl ThermoParams {
    /// n = 0..=⌊λ⌋, with at least the ground level.
    pub fn level_count(&self) -> usize {
        if self.lambda_max >= 0.0 {
            self.lambda_max.floor() as usize + 1
        } else {
            1
        }
    }

    /// E_n = P[Q − α²(n + H)²] in cm⁻¹.
    pub fn level(&self, n: usize) -> f64 {
        let x = n as f64 + self.h;
        self.prefactor * (self.q - self.alpha * self.alpha * x * x)
    }

    pub fn levels(&self) -> Vec<f64> {
        (0..self.level_count()).map(|n| self.level(n)).collect()
    }

    /// P(Q − α²H²), the n = 0 energy, which is the first exponent in the
    /// closed form.
    pub fn reference_energy(&self) -> f64 {
        self.prefactor * (self.q - self.alpha * self.alpha * self.h * self.h)
    }
}

/// Signed log-sum-exp: ln Σ cᵢ e^{aᵢ}. `None` when the sum is not positive.
fn ln_signed_sum(terms: &[(f64, f64)]) -> Option<f64> {
    let top = terms
        .iter()
        .filter(|(c, _)| *c != 0.0)
        .map(|&(_, a)| a)
        .fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return None;
    }
    let s: f64 = terms
        .iter()
        .filter(|(c, _)| *c != 0.0)
        .map(|&(c, a)| c * (a - top).exp())
        .sum();
    (s > 0.0).then(|| top + s.ln())
}

/// Z e^{βE_ref} for the closed form as Σ cᵢ e^{aᵢ}, E_ref = [`ThermoParams::reference_energy`].
fn closed_terms(beta: f64, tp: &ThermoParams) -> Result<[(f64, f64); 4], ThermoError> {
    if !(beta > 0.0 && beta.is_finite()) {
        return domain(format!("inverse temperature {beta} must be positive and finite"));
    }
    let x = tp.alpha * (beta * tp.prefactor).sqrt();
    let u0 = x * tp.h;
    let u1 = x * (tp.h + tp.lambda_max + 1.0);
    // exponents relative to −βPQ + u0², which is −β E_ref
    let d1 = (u1 - u0) * (u1 + u0);
    // √π e^{u²} erfi(u)/(2x) = e^{u²} F(u)/x with F Dawson's function
    Ok([(0.5, 0.0), (-0.5, d1), (dawson(u1) / x, d1), (-dawson(u0) / x, 0.0)])
}

/// r(β) = ln Z + β E_ref for the closed form.
fn closed_remainder(beta: f64, tp: &ThermoParams) -> Result<f64, ThermoError> {
    ln_signed_sum(&closed_terms(beta, tp)?).ok_or(ThermoError::Range { beta, value: 0.0 })
}

/// ln Z from the closed form.
pub fn ln_partition_closed(beta: f64, tp: &ThermoParams) -> Result<f64, ThermoError> {
    Ok(-beta * tp.reference_energy() + closed_remainder(beta, tp)?)
}

/// Z from the closed form; may be ±∞-free only when ln Z fits in f64's range.
pub fn partition_closed(beta: f64, tp: &ThermoParams) -> Result<f64, ThermoError> {
    let ln_z = ln_partition_closed(beta, tp)?;
    let z = ln_z.exp();
    if z.is_infinite() {
        return Err(ThermoError::Range { beta, value: z });
    }
    Ok(z)
}

/// Σ e^{−β(Eₙ − E_min)} − 1 over all but one minimal level, Neumaier-compensated.
fn direct_excess(beta: f64, levels: &[f64], e_min: f64) -> f64 {
    let mut skipped = false;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &e in levels {
        if !skipped && e == e_min {
            skipped = true;
            continue;
        }
        let term = (-beta * (e - e_min)).exp();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn lowest(levels: &[f64]) -> Result<f64, ThermoError> {
    if levels.is_empty() {
        return domain("direct partition sum needs at least one level");
    }
    if let Some(bad) = levels.iter().find(|e| !e.is_finite()) {
        return domain(format!("level energy {bad} is not finite"));
    }
    Ok(levels.iter().copied().fold(f64::INFINITY, f64::min))
}

/// ln Σ e^{−βEₙ}.
pub fn ln_partition_direct(beta: f64, levels: &[f64]) -> Result<f64, ThermoError> {
    let e_min = lowest(levels)?;
    Ok(-beta * e_min + direct_excess(beta, levels, e_min).ln_1p())
}

/// Σ e^{−βEₙ}, compensated.
pub fn partition_direct(beta: f64, levels: &[f64]) -> Result<f64, ThermoError> {
    let e_min = lowest(levels)?;
    Ok((-beta * e_min).exp() * (1.0 + direct_excess(beta, levels, e_min)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionMethod {
    ClosedForm,
    DirectSum,
}

impl PartitionMethod {
    pub fn name(self) -> &'static str {
        match self {
            PartitionMethod::ClosedForm => "closed_form",
            PartitionMethod::DirectSum => "direct_sum",
        }
    }
}

/// A partition function ready for evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Partition {
    Closed(ThermoParams),
    Direct(Vec<f64>),
}

impl Partition {
    pub fn method(&self) -> PartitionMethod {
        match self {
            Partition::Closed(_) => PartitionMethod::ClosedForm,
            Partition::Direct(_) => PartitionMethod::DirectSum,
        }
    }

    fn reference(&self) -> Result<f64, ThermoError> {
        match self {
            Partition::Closed(tp) => Ok(tp.reference_energy()),
            Partition::Direct(levels) => lowest(levels),
        }
    }

    fn remainder(&self, beta: f64, e_ref: f64) -> Result<f64, ThermoError> {
        match self {
            Partition::Closed(tp) => closed_remainder(beta, tp),
            Partition::Direct(levels) => Ok(direct_excess(beta, levels, e_ref).ln_1p()),
        }
    }

    pub fn ln_z(&self, beta: f64) -> Result<f64, ThermoError> {
        let e_ref = self.reference()?;
        Ok(-beta * e_ref + self.remainder(beta, e_ref)?)
    }
}

/// Exact Boltzmann moments of a direct sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactMoments {
    /// ⟨E⟩, cm⁻¹.
    pub u: f64,
    /// k_B β² (⟨E²⟩ − ⟨E⟩²), cm⁻¹/K.
    pub cv: f64,
}

pub fn exact_moments(beta: f64, levels: &[f64]) -> Result<ExactMoments, ThermoError> {
    let e_min = lowest(levels)?;
    let weights: Vec<f64> = levels.iter().map(|e| (-beta * (e - e_min)).exp()).collect();
    let z: f64 = weights.iter().sum();
    let mean = e_min + weights.iter().zip(levels).map(|(w, e)| w * (e - e_min)).sum::<f64>() / z;
    let var = weights
        .iter()
        .zip(levels)
        .map(|(w, e)| w * (e - mean) * (e - mean))
        .sum::<f64>()
        / z;
    Ok(ExactMoments {
        u: mean,
        cv: K_B * beta * beta * var,
    })
}

/// One temperature sample. Energies in cm⁻¹, S and Cv in cm⁻¹/K.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoPoint {
    pub t: f64,
    pub inverse_temperature: f64,
    pub ln_z: f64,
    /// e^{ln Z}; may be 0 or ∞ where ln Z leaves the f64 exponent range.
    pub z: f64,
    pub f: f64,
    pub u: f64,
    pub s: f64,
    pub cv: f64,
    pub method: PartitionMethod,
    pub exact: Option<ExactMoments>,
}

const FD_START: f64 = 1e-4;
const FD_TOL: f64 = 1e-7;
/// Accepted when rounding stops the sequence short of `FD_TOL`.
const FD_FALLBACK_TOL: f64 = 1e-5;
const FD_MAX_HALVINGS: usize = 30;

impl Partition {
    /// (ln Z(β+h) − ln Z(β), ln Z(β−h) − ln Z(β)) for a sequence of h.
    ///
    /// Both forms build Z(β±h)/Z(β) − 1 from expm1 and term-wise differences,
    /// so each increment keeps close to full relative accuracy instead of
    /// being the difference of two O(1) logarithms.
    fn increments(&self, beta: f64, e_ref: f64) -> Result<Increments<'_>, ThermoError> {
        Ok(match self {
            Partition::Direct(levels) => {
                let weights: Vec<f64> = levels.iter().map(|e| (-beta * (e - e_ref)).exp()).collect();
                let z: f64 = weights.iter().sum();
                Increments::Direct {
                    probs: weights.into_iter().map(|w| w / z).collect(),
                    levels,
                    e_ref,
                }
            }
            Partition::Closed(tp) => {
                let terms = closed_terms(beta, tp)?;
                let top = terms.iter().map(|t| t.1).fold(f64::NEG_INFINITY, f64::max);
                let total: f64 = terms.iter().map(|&(c, a)| c * (a - top).exp()).sum();
                if !(total > 0.0) {
                    return Err(ThermoError::Range { beta, value: total });
                }
                let x = tp.alpha * (beta * tp.prefactor).sqrt();
                let u0 = x * tp.h;
                let u1 = x * (tp.h + tp.lambda_max + 1.0);
                Increments::Closed {
                    beta,
                    x,
                    u: [u0, u1],
                    f: [dawson(u0), dawson(u1)],
                    d1: terms[1].1,
                    top,
                    total,
                }
            }
        })
    }
}

enum Increments<'a> {
    Direct {
        probs: Vec<f64>,
        levels: &'a [f64],
        e_ref: f64,
    },
    Closed {
        beta: f64,
        x: f64,
        u: [f64; 2],
        f: [f64; 2],
        d1: f64,
        top: f64,
        total: f64,
    },
}

impl Increments<'_> {
    fn at(&self, h: f64) -> Result<(f64, f64), ThermoError> {
        match self {
            Increments::Direct { probs, levels, e_ref } => {
                let shift = |step: f64| {
                    let s: f64 = probs
                        .iter()
                        .zip(levels.iter())
                        .map(|(p, e)| p * (-step * (e - e_ref)).exp_m1())
                        .sum();
                    s.ln_1p()
                };
                Ok((shift(h), shift(-h)))
            }
            Increments::Closed {
                beta,
                x,
                u,
                f,
                d1,
                top,
                total,
            } => {
                // x, u ∝ √β and d1 ∝ β, so every term moves by factors known in
                // closed form; Dawson's function is shifted by its Taylor series
                // about the base point, keeping the increment smooth in the step
                let shift = |step: f64| {
                    let t = step / beta;
                    let sq = (1.0 + t).sqrt();
                    let sqm1 = t / (1.0 + sq);
                    let q = -sqm1 / sq;
                    let e = (d1 * t).exp_m1();
                    let df0 = dawson_shift(u[0], f[0], u[0] * sqm1);
                    let df1 = dawson_shift(u[1], f[1], u[1] * sqm1);
                    let w0 = (-top).exp();
                    let w1 = (d1 - top).exp();
                    let change = w1 * (-0.5 * e + (f[1] * (e + q + e * q) + df1 * (1.0 + e) * (1.0 + q)) / x)
                        - w0 * (f[0] * q + df0 * (1.0 + q)) / x;
                    (change / total).ln_1p()
                };
                Ok((shift(h), shift(-h)))
            }
        }
    }
}

/// F(u + δ) − F(u) for Dawson's function F, given F(u), from the Taylor
/// coefficients c₀ = F, c₁ = 1 − 2uF, c_{k+1} = −2(u c_k + c_{k−1})/(k+1).
fn dawson_shift(u: f64, f_u: f64, delta: f64) -> f64 {
    if delta == 0.0 {
        return 0.0;
    }
    if (u * delta).abs() > 8.0 {
        return dawson(u + delta) - f_u;
    }
    let (mut prev, mut cur) = (f_u, 1.0 - 2.0 * u * f_u);
    let mut power = delta;
    let mut sum = cur * power;
    let mut quiet = 0;
    let min_terms = (2.0 * (u * delta).abs() + delta * delta) as usize + 2;
    for k in 1..400 {
        let next = -2.0 * (u * cur + prev) / (k + 1) as f64;
        power *= delta;
        let term = next * power;
        sum += term;
        if term.abs() <= f64::EPSILON * sum.abs() && k >= min_terms {
            quiet += 1;
            if quiet == 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        prev = cur;
        cur = next;
    }
    sum
}

/// r′ and r″ at β by central differences with Richardson extrapolation.
///
/// The step starts at β·10⁻⁴ and is halved until consecutive extrapolated
/// values agree to 10⁻⁷ relative. If rounding makes the differences grow
/// again before that, the closest pair is accepted provided it agrees to
/// 10⁻⁵.
fn remainder_derivatives(z: &Partition, beta: f64, e_ref: f64, t: f64) -> Result<(f64, f64), ThermoError> {
    let inc = z.increments(beta, e_ref)?;
    let diffs = |h: f64| -> Result<(f64, f64), ThermoError> {
        let (up, down) = inc.at(h)?;
        Ok(((up - down) / (2.0 * h), (up + down) / (h * h)))
    };
    let gap = |a: f64, b: f64| {
        if a == b {
            0.0
        } else {
            (a - b).abs() / a.abs().max(b.abs())
        }
    };

    struct Track {
        prev: Option<f64>,
        best: Option<(f64, f64)>,
        worse: usize,
        done: Option<f64>,
    }
    impl Track {
        fn push(&mut self, value: f64, gap: impl Fn(f64, f64) -> f64) {
            if self.done.is_some() {
                return;
            }
            if let Some(prev) = self.prev {
                let g = gap(prev, value);
                if g <= FD_TOL {
                    self.done = Some(value);
                    return;
                }
                match self.best {
                    Some((bg, _)) if g >= bg => self.worse += 1,
                    _ => {
                        self.best = Some((g, value));
                        self.worse = 0;
                    }
                }
            }
            self.prev = Some(value);
        }

        fn settled(&self) -> Option<f64> {
            self.done.or(match self.best {
                Some((g, v)) if self.worse >= 3 && g <= FD_FALLBACK_TOL => Some(v),
                _ => None,
            })
        }
    }

    let new_track = || Track {
        prev: None,
        best: None,
        worse: 0,
        done: None,
    };
    let (mut first, mut second) = (new_track(), new_track());
    let mut h = beta * FD_START;
    let mut coarse = diffs(h)?;
    for _ in 0..FD_MAX_HALVINGS {
        h *= 0.5;
        let fine = diffs(h)?;
        first.push((4.0 * fine.0 - coarse.0) / 3.0, gap);
        second.push((4.0 * fine.1 - coarse.1) / 3.0, gap);
        if let (Some(d1), Some(d2)) = (first.settled(), second.settled()) {
            return Ok((d1, d2));
        }
        coarse = fine;
    }
    Err(ThermoError::Differentiation { t })
}

pub fn thermal_point(z: &Partition, t: f64) -> Result<ThermoPoint, ThermoError> {
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("temperature {t} K must be positive and finite"));
    }
    let beta = inverse_temperature(t);
    let e_ref = z.reference()?;
    let r = z.remainder(beta, e_ref)?;
    let (d1, d2) = remainder_derivatives(z, beta, e_ref, t)?;
    let ln_z = -beta * e_ref + r;
    let exact = match z {
        Partition::Direct(levels) => Some(exact_moments(beta, levels)?),
        Partition::Closed(_) => None,
    };
    Ok(ThermoPoint {
        t,
        inverse_temperature: beta,
        ln_z,
        z: ln_z.exp(),
        f: e_ref - r / beta,
        u: e_ref - d1,
        s: K_B * (r - beta * d1),
        cv: K_B * beta * beta * d2,
        method: z.method(),
        exact,
    })
}

/// F, U, S and Cv on a strictly increasing temperature grid.
pub fn thermal_functions(z: &Partition, t_grid: &[f64]) -> Result<Vec<ThermoPoint>, ThermoError> {
    if let Some(w) = t_grid.windows(2).find(|w| !(w[1] > w[0])) {
        return domain(format!(
            "temperature grid must increase strictly ({} then {})",
            w[0], w[1]
        ));
    }
    t_grid.iter().map(|&t| thermal_point(z, t)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Log,
}

pub fn temperature_grid(t_min: f64, t_max: f64, points: usize, scale: GridScale) -> Result<Vec<f64>, ThermoError> {
    if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) {
        return domain(format!("need 0 < tmin < tmax, got [{t_min}, {t_max}]"));
    }
    if points < 2 {
        return domain(format!("temperature grid needs at least 2 points, got {points}"));
    }
    let last = (points - 1) as f64;
    let grid = (0..points)
        .map(|i| {
            let f = i as f64 / last;
            match scale {
                GridScale::Linear => t_min + (t_max - t_min) * f,
                GridScale::Log => t_min * (t_max / t_min).powf(f),
            }
        })
        .map(|t| t.min(t_max))
        .collect::<Vec<_>>();
    Ok(grid)
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

    fn mu_total(mu: f64) -> DunklParams {
        DunklParams::uniform(mu / 3.0).unwrap()
    }

    #[test]
    fn undeformed_parameters() {
        let tp = thermo_params(&h2(), &DunklParams::undeformed(), PekerisVariant::Paper).unwrap();
        let dp = h2().depth_ratio();
        assert_eq!(tp.q, 0.0);
        assert_eq!(tp.xi1_sq, dp);
        assert!((tp.h - (0.5 - dp.sqrt() / 1.44)).abs() < 1e-12);
        assert_eq!(tp.h + tp.lambda_max + 1.0, 1.0);
    }

    #[test]
    fn h2_parameters_at_mu_1_2() {
        let tp = thermo_params(&h2(), &mu_total(1.2), PekerisVariant::Paper).unwrap();
        assert!((tp.q - 0.959_444).abs() < 1e-6);
        assert!((tp.h + 16.689_15).abs() < 1e-4);
        assert_eq!(tp.level_count(), 17);
    }

    #[test]
    fn direct_sum_trivia() {
        let e0 = 1234.5;
        let beta = 0.01;
        assert!((partition_direct(beta, &[e0]).unwrap() / (-beta * e0).exp() - 1.0).abs() < 1e-15);
        assert_eq!(partition_direct(0.0, &[1.0, 2.0, 3.0]).unwrap(), 3.0);
        assert!(partition_direct(1.0, &[]).is_err());
    }

    #[test]
    fn single_level_thermodynamics() {
        let z = Partition::Direct(vec![-500.0]);
        let pt = thermal_point(&z, 300.0).unwrap();
        assert!((pt.u + 500.0).abs() < 1e-9);
        assert_eq!(pt.cv, 0.0);
        assert_eq!(pt.s, 0.0);
    }

    #[test]
    fn closed_form_second_exponential_identity() {
        let tp = thermo_params(&h2(), &mu_total(1.2), PekerisVariant::Paper).unwrap();
        let x1 = tp.h + tp.lambda_max + 1.0;
        let beta = 0.003;
        let lhs = -beta * tp.prefactor * (tp.q - tp.alpha * tp.alpha * x1 * x1);
        let rhs = -beta * tp.prefactor * (tp.q - tp.alpha * tp.alpha);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_form_matches_direct_at_high_temperature() {
        for mol in [h2(), hcl()] {
            let tp = thermo_params(&mol, &mu_total(1.2), PekerisVariant::Paper).unwrap();
            let levels = tp.levels();
            let beta = inverse_temperature(1e5);
            let c = partition_closed(beta, &tp).unwrap();
            let d = partition_direct(beta, &levels).unwrap();
            assert!((c / d - 1.0).abs() < 0.05, "{} {c} {d}", mol.name);
        }
    }

    #[test]
    fn closed_form_low_temperature_limit() {
        // Z_closed/Z_direct → ½ + 1/(2x²|H|) once the ground level dominates
        let tp = thermo_params(&h2(), &mu_total(1.2), PekerisVariant::Paper).unwrap();
        let beta = inverse_temperature(100.0);
        let x2 = tp.alpha * tp.alpha * beta * tp.prefactor;
        let ratio = (ln_partition_closed(beta, &tp).unwrap() - ln_partition_direct(beta, &tp.levels()).unwrap()).exp();
        let expect = 0.5 + 0.5 / (x2 * tp.h.abs());
        assert!((ratio / expect - 1.0).abs() < 1e-2, "{ratio} {expect}");
    }

    #[test]
    fn finite_differences_match_moments() {
        for mol in [h2(), hcl()] {
            let tp = thermo_params(&mol, &mu_total(1.2), PekerisVariant::Paper).unwrap();
            let z = Partition::Direct(tp.levels());
            let grid = temperature_grid(100.0, 5000.0, 40, GridScale::Log).unwrap();
            let pts = thermal_functions(&z, &grid).unwrap();
            let mut last_s = f64::NEG_INFINITY;
            for p in pts {
                let ex = p.exact.unwrap();
                assert!((p.u / ex.u - 1.0).abs() < 1e-6, "U at {}: {} {}", p.t, p.u, ex.u);
                assert!((p.cv / ex.cv - 1.0).abs() < 1e-6, "Cv at {}: {} {}", p.t, p.cv, ex.cv);
                assert!(p.cv >= 0.0);
                assert!(p.s >= last_s);
                last_s = p.s;
            }
        }
    }

    #[test]
    fn closed_form_thermodynamics_are_finite() {
        let tp = thermo_params(&hcl(), &mu_total(1.2), PekerisVariant::Paper).unwrap();
        let grid = temperature_grid(10.0, 1e4, 25, GridScale::Log).unwrap();
        for p in thermal_functions(&Partition::Closed(tp), &grid).unwrap() {
            assert!(p.ln_z.is_finite() && p.u.is_finite() && p.s.is_finite() && p.cv.is_finite());
            assert!(p.exact.is_none());
        }
    }

    #[test]
    fn dawson_taylor_shift() {
        for &u in &[-70.0, -5.7, -0.3, 0.0, 0.34, 2.0, 9.0] {
            for d in [1e-3, -2e-2, 5e-5 * u, -2e-5 * u] {
                let want = dawson(u + d) - dawson(u);
                let got = dawson_shift(u, dawson(u), d);
                assert!(
                    (got - want).abs() < 1e-13 * (1.0 + dawson(u).abs()),
                    "u {u} d {d}: {got} {want}"
                );
            }
        }
    }

    #[test]
    fn grids() {
        let g = temperature_grid(100.0, 5000.0, 64, GridScale::Log).unwrap();
        assert_eq!(g.len(), 64);
        assert_eq!(g[0], 100.0);
        assert!((g[63] - 5000.0).abs() < 1e-9);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        assert!(temperature_grid(0.0, 1.0, 5, GridScale::Linear).is_err());
        assert!(thermal_functions(&Partition::Direct(vec![0.0]), &[2.0, 1.0]).is_err());
    }
}
