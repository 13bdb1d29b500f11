//! Angular sector of the Dunkl Laplacian.
//!
//! The azimuthal operator
//!
//! ```text
//! J_φ = ∂²_φ + 2(μ₂ cot φ − μ₁ tan φ) ∂_φ − μ₁/cos²φ (1 − R₁) − μ₂/sin²φ (1 − R₂)
//! ```
//!
//! and the polar operator
//!
//! ```text
//! J_θ = ∂²_θ + 2((½ + μ₁ + μ₂) cot θ − μ₃ tan θ) ∂_θ − μ₃/cos²θ (1 − R₃)
//! ```
//!
//! commute with the reflections R₁: φ → π − φ, R₂: φ → −φ and R₃: θ → π − θ,
//! so eigenfunctions are labelled by reflection signs (s₁, s₂, s₃). Each sector
//! has an explicit Jacobi-polynomial family; this module evaluates them with
//! unit norm under the Dunkl weight and checks the eigenvalue equations with
//! finite differences.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::quadrature::{integrate, QuadOptions, QuadratureError};
use crate::specfun::{jacobi, SpecfunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AngularError {
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, AngularError> {
    Err(AngularError::Domain(msg.into()))
}

/// A non-negative multiple of ½, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: u32) -> Self {
        HalfInt(twice)
    }

    pub const fn int(n: u32) -> Self {
        HalfInt(2 * n)
    }

    /// Accepts x ≥ 0 with 2x integral.
    pub fn new(x: f64) -> Result<Self, AngularError> {
        let twice = 2.0 * x;
        if !(x >= 0.0 && twice.fract() == 0.0 && twice <= u32::MAX as f64) {
            return domain(format!("{x} is not a non-negative multiple of 1/2"));
        }
        Ok(HalfInt(twice as u32))
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        0.5 * self.0 as f64
    }

    pub fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `self − ½`, if non-negative.
    fn minus_half(self) -> Option<HalfInt> {
        self.0.checked_sub(1).map(HalfInt)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = AngularError;

    /// Parses `"3"`, `"1.5"` or `"3/2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let den = den.trim();
            if den != "2" && den != "1" {
                return domain(format!("'{s}': only denominators 1 and 2 are allowed"));
            }
            let num: u32 = num
                .trim()
                .parse()
                .map_err(|_| AngularError::Domain(format!("'{s}' is not a half-integer")))?;
            return Ok(if den == "2" { HalfInt(num) } else { HalfInt(2 * num) });
        }
        let x: f64 = s
            .parse()
            .map_err(|_| AngularError::Domain(format!("'{s}' is not a half-integer")))?;
        HalfInt::new(x)
    }
}

/// Eigenvalue of one reflection operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    pub fn from_sign(s: i32) -> Result<Self, AngularError> {
        match s {
            1 => Ok(Parity::Even),
            -1 => Ok(Parity::Odd),
            _ => domain(format!("parity label must be +1 or -1, got {s}")),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "+",
            Parity::Odd => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParityLabels {
    pub s1: Parity,
    pub s2: Parity,
    pub s3: Parity,
}

impl ParityLabels {
    pub const EVEN: ParityLabels = ParityLabels {
        s1: Parity::Even,
        s2: Parity::Even,
        s3: Parity::Even,
    };

    pub fn new(s1: Parity, s2: Parity, s3: Parity) -> Self {
        Self { s1, s2, s3 }
    }

    /// Whether m must be an integer (s₁s₂ = +1) or half-odd (s₁s₂ = −1).
    pub fn requires_integer_m(&self) -> bool {
        self.s1 == self.s2
    }

    /// Checks the index sets of both angular families.
    pub fn check(&self, ell: HalfInt, m: HalfInt) -> Result<(), AngularError> {
        check_azimuthal(self.s1, self.s2, m)?;
        check_polar(self.s3, ell)
    }
}

/// Deformation strengths (μ₁, μ₂, μ₃), each > −½.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DunklParams {
    mu1: f64,
    mu2: f64,
    mu3: f64,
}

impl DunklParams {
    pub fn new(mu1: f64, mu2: f64, mu3: f64) -> Result<Self, AngularError> {
        for (i, mu) in [mu1, mu2, mu3].into_iter().enumerate() {
            if !(mu.is_finite() && mu > -0.5) {
                return domain(format!("mu{} = {mu} violates mu > -1/2", i + 1));
            }
        }
        Ok(Self { mu1, mu2, mu3 })
    }

    pub fn uniform(mu: f64) -> Result<Self, AngularError> {
        Self::new(mu, mu, mu)
    }

    pub fn undeformed() -> Self {
        Self {
            mu1: 0.0,
            mu2: 0.0,
            mu3: 0.0,
        }
    }

    pub fn mu1(&self) -> f64 {
        self.mu1
    }

    pub fn mu2(&self) -> f64 {
        self.mu2
    }

    pub fn mu3(&self) -> f64 {
        self.mu3
    }

    /// μ = μ₁ + μ₂ + μ₃.
    pub fn mu(&self) -> f64 {
        self.mu1 + self.mu2 + self.mu3
    }

    /// δ = −(1 + μ), the power of r split off the radial function.
    pub fn delta(&self) -> f64 {
        -(1.0 + self.mu())
    }

    /// μ(μ + 1), which equals δ(δ + 1).
    pub fn mu_term(&self) -> f64 {
        let mu = self.mu();
        mu * (mu + 1.0)
    }
}

/// λ² = 4m(m + μ₁ + μ₂).
pub fn azimuthal_eigenvalue(m: HalfInt, p: &DunklParams) -> f64 {
    let m = m.value();
    4.0 * m * (m + p.mu1 + p.mu2)
}

/// ϖ² = 4(ℓ + m)(ℓ + m + μ + ½).
pub fn polar_eigenvalue(ell: HalfInt, m: HalfInt, p: &DunklParams) -> f64 {
    let k = ell.value() + m.value();
    4.0 * k * (k + p.mu() + 0.5)
}

fn check_azimuthal(s1: Parity, s2: Parity, m: HalfInt) -> Result<(), AngularError> {
    let want_integer = s1 == s2;
    if want_integer != m.is_integer() {
        return domain(format!(
            "sector ({s1},{s2}) needs {} m, got m = {m}",
            if want_integer { "integer" } else { "half-odd" }
        ));
    }
    if s1 == Parity::Odd && s2 == Parity::Odd && m.twice() == 0 {
        return domain("sector (-,-) starts at m = 1");
    }
    Ok(())
}

fn check_polar(s3: Parity, ell: HalfInt) -> Result<(), AngularError> {
    let want_integer = s3 == Parity::Even;
    if want_integer != ell.is_integer() {
        return domain(format!(
            "s3 = {s3} needs {} ell, got ell = {ell}",
            if want_integer { "integer" } else { "half-odd" }
        ));
    }
    Ok(())
}

/// (sin x, cos x) on quadrant `q` of the circle, from the distances to the
/// quadrant ends supplied by the quadrature.
fn quadrant_sincos(q: usize, dl: f64, dr: f64) -> (f64, f64) {
    // on [0, π/2] with x = dl = π/2 − dr
    let (s, c) = if dl <= dr {
        (dl.sin(), dl.cos())
    } else {
        (dr.cos(), dr.sin())
    };
    match q % 4 {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

const QUADRANTS: [f64; 5] = [0.0, FRAC_PI_2, PI, 1.5 * PI, 2.0 * PI];

/// Normalised azimuthal eigenfunction Φ of one (s₁, s₂) sector.
#[derive(Debug, Clone, PartialEq)]
pub struct AzimuthalFunction {
    s1: Parity,
    s2: Parity,
    m: HalfInt,
    params: DunklParams,
    degree: u32,
    a: f64,
    b: f64,
    norm: f64,
}

impl AzimuthalFunction {
    pub fn new(s1: Parity, s2: Parity, m: HalfInt, params: DunklParams) -> Result<Self, AngularError> {
        check_azimuthal(s1, s2, m)?;
        let (mu1, mu2) = (params.mu1, params.mu2);
        let (degree, a, b) = match (s1, s2) {
            (Parity::Even, Parity::Even) => (m.twice() / 2, mu1 - 0.5, mu2 - 0.5),
            (Parity::Odd, Parity::Odd) => (m.twice() / 2 - 1, mu1 + 0.5, mu2 + 0.5),
            (Parity::Even, Parity::Odd) => (m.twice() / 2, mu1 - 0.5, mu2 + 0.5),
            (Parity::Odd, Parity::Even) => (m.twice() / 2, mu1 + 0.5, mu2 - 0.5),
        };
        let mut f = Self {
            s1,
            s2,
            m,
            params,
            degree,
            a,
            b,
            norm: 1.0,
        };
        // Φ² has both reflection symmetries, so one quadrant carries a quarter
        let quarter = integrate(
            |_, dl, dr| {
                let (s, c) = quadrant_sincos(0, dl, dr);
                let v = f.eval_sc(s, c);
                v * v * f.weight_sc(s, c)
            },
            0.0,
            FRAC_PI_2,
            &QuadOptions::default(),
        )?;
        f.norm = 1.0 / (4.0 * quarter.value).sqrt();
        Ok(f)
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    pub fn labels(&self) -> (Parity, Parity) {
        (self.s1, self.s2)
    }

    /// λ² of this function.
    pub fn eigenvalue(&self) -> f64 {
        azimuthal_eigenvalue(self.m, &self.params)
    }

    pub fn eval(&self, phi: f64) -> f64 {
        self.eval_sc(phi.sin(), phi.cos())
    }

    /// Φ from (sin φ, cos φ).
    pub fn eval_sc(&self, s: f64, c: f64) -> f64 {
        let x = s * s - c * c; // −cos 2φ
        let prefactor = match (self.s1, self.s2) {
            (Parity::Even, Parity::Even) => 1.0,
            (Parity::Odd, Parity::Odd) => 2.0 * s * c,
            (Parity::Even, Parity::Odd) => s,
            (Parity::Odd, Parity::Even) => c,
        };
        let p = jacobi(self.degree, self.a, self.b, x).expect("Jacobi parameters exceed -1");
        self.norm * prefactor * p
    }

    /// |cos φ|^{2μ₁} |sin φ|^{2μ₂}.
    pub fn weight_sc(&self, s: f64, c: f64) -> f64 {
        c.abs().powf(2.0 * self.params.mu1) * s.abs().powf(2.0 * self.params.mu2)
    }
}

/// ∫₀^{2π} f g |cos φ|^{2μ₁} |sin φ|^{2μ₂} dφ, summed quadrant by quadrant.
pub fn azimuthal_inner_product(
    f: &AzimuthalFunction,
    g: &AzimuthalFunction,
    opts: &QuadOptions,
) -> Result<f64, AngularError> {
    if f.params != g.params {
        return domain("inner product of functions with different deformation parameters");
    }
    let mut total = 0.0;
    for q in 0..4 {
        let piece = integrate(
            |_, dl, dr| {
                let (s, c) = quadrant_sincos(q, dl, dr);
                f.eval_sc(s, c) * g.eval_sc(s, c) * f.weight_sc(s, c)
            },
            QUADRANTS[q],
            QUADRANTS[q + 1],
            opts,
        )?;
        total += piece.value;
    }
    Ok(total)
}

/// Normalised polar eigenfunction Θ for a given s₃, ℓ and azimuthal m.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarFunction {
    s3: Parity,
    ell: HalfInt,
    m: HalfInt,
    params: DunklParams,
    degree: u32,
    a: f64,
    b: f64,
    norm: f64,
}

impl PolarFunction {
    pub fn new(s3: Parity, ell: HalfInt, m: HalfInt, params: DunklParams) -> Result<Self, AngularError> {
        check_polar(s3, ell)?;
        let a = m.value() * 2.0 + params.mu1 + params.mu2;
        let (degree, b) = match s3 {
            Parity::Even => (ell.twice() / 2, params.mu3 - 0.5),
            Parity::Odd => (
                ell.minus_half().expect("half-odd ell is positive").twice() / 2,
                params.mu3 + 0.5,
            ),
        };
        let mut f = Self {
            s3,
            ell,
            m,
            params,
            degree,
            a,
            b,
            norm: 1.0,
        };
        let half = integrate(
            |_, dl, dr| {
                let (s, c) = quadrant_sincos(0, dl, dr);
                let v = f.eval_sc(s, c);
                v * v * f.weight_sc(s, c)
            },
            0.0,
            FRAC_PI_2,
            &QuadOptions::default(),
        )?;
        f.norm = 1.0 / (2.0 * half.value).sqrt();
        Ok(f)
    }

    pub fn ell(&self) -> HalfInt {
        self.ell
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.s3
    }

    /// ϖ² of this function.
    pub fn eigenvalue(&self) -> f64 {
        polar_eigenvalue(self.ell, self.m, &self.params)
    }

    pub fn eval(&self, theta: f64) -> f64 {
        self.eval_sc(theta.sin(), theta.cos())
    }

    /// Θ from (sin θ, cos θ). The power sin^{2m} is taken with the integer
    /// exponent 2m, so the function continues analytically past θ = 0 and π.
    pub fn eval_sc(&self, s: f64, c: f64) -> f64 {
        let x = c * c - s * s; // cos 2θ
        let mut v = s.powi(self.m.twice() as i32);
        if self.s3 == Parity::Odd {
            v *= c;
        }
        let p = jacobi(self.degree, self.a, self.b, x).expect("Jacobi parameters exceed -1");
        self.norm * v * p
    }

    /// sin^{2(μ₁+μ₂)+1} θ |cos θ|^{2μ₃}.
    pub fn weight_sc(&self, s: f64, c: f64) -> f64 {
        s.abs().powf(2.0 * (self.params.mu1 + self.params.mu2) + 1.0) * c.abs().powf(2.0 * self.params.mu3)
    }
}

/// ∫₀^π f g sin^{2(μ₁+μ₂)+1}θ |cos θ|^{2μ₃} dθ.
pub fn polar_inner_product(f: &PolarFunction, g: &PolarFunction, opts: &QuadOptions) -> Result<f64, AngularError> {
    if f.params != g.params || f.m != g.m {
        return domain("polar functions are only orthogonal at equal m and deformation");
    }
    let mut total = 0.0;
    for q in 0..2 {
        let piece = integrate(
            |_, dl, dr| {
                let (s, c) = quadrant_sincos(q, dl, dr);
                f.eval_sc(s, c) * g.eval_sc(s, c) * f.weight_sc(s, c)
            },
            QUADRANTS[q],
            QUADRANTS[q + 1],
            opts,
        )?;
        total += piece.value;
    }
    Ok(total)
}

pub fn azimuthal_wavefunction(labels: ParityLabels, m: HalfInt, p: DunklParams, phi: f64) -> Result<f64, AngularError> {
    Ok(AzimuthalFunction::new(labels.s1, labels.s2, m, p)?.eval(phi))
}

pub fn polar_wavefunction(
    s3: Parity,
    ell: HalfInt,
    m: HalfInt,
    p: DunklParams,
    theta: f64,
) -> Result<f64, AngularError> {
    Ok(PolarFunction::new(s3, ell, m, p)?.eval(theta))
}

/// Eighth-order central-difference weights for f' and f'' at offsets 1..=4.
const D1: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
const D2_CENTER: f64 = -205.0 / 72.0;
const D2: [f64; 4] = [8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0];

fn derivatives(f: impl Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    let mut d1 = 0.0;
    let mut d2 = D2_CENTER * f(x);
    for (k, (w1, w2)) in D1.iter().zip(D2.iter()).enumerate() {
        let t = (k + 1) as f64 * h;
        let (fp, fm) = (f(x + t), f(x - t));
        d1 += w1 * (fp - fm);
        d2 += w2 * (fp + fm);
    }
    (d1 / h, d2 / (h * h))
}

const MIN_GRID: usize = 64;

/// max |(J_φ + λ²) Φ| over φⱼ = (j + ½)·2π/N, derivatives by eighth-order
/// central differences with step 2π/N and reflections applied exactly.
pub fn verify_azimuthal_eigen(
    labels: ParityLabels,
    m: HalfInt,
    p: DunklParams,
    grid_size: usize,
) -> Result<f64, AngularError> {
    if grid_size < MIN_GRID {
        return domain(format!("grid_size must be at least {MIN_GRID}, got {grid_size}"));
    }
    if grid_size % 4 == 2 {
        return domain(format!(
            "grid_size {grid_size} puts a grid point on phi = pi/2 where the operator is singular"
        ));
    }
    let f = AzimuthalFunction::new(labels.s1, labels.s2, m, p)?;
    let lambda_sq = f.eigenvalue();
    let h = 2.0 * PI / grid_size as f64;
    let (mu1, mu2) = (p.mu1, p.mu2);
    let mut worst: f64 = 0.0;
    for j in 0..grid_size {
        let phi = (j as f64 + 0.5) * h;
        let (s, c) = phi.sin_cos();
        let v = f.eval(phi);
        let (d1, d2) = derivatives(|x| f.eval(x), phi, h);
        let r1 = f.eval(PI - phi);
        let r2 = f.eval(-phi);
        let jv = d2 + 2.0 * (mu2 * c / s - mu1 * s / c) * d1 - mu1 / (c * c) * (v - r1) - mu2 / (s * s) * (v - r2);
        worst = worst.max((jv + lambda_sq * v).abs());
    }
    Ok(worst)
}

/// max |(J_θ − λ²/sin²θ + ϖ²) Θ| over θⱼ = (j + ½)·π/N.
pub fn verify_polar_eigen(
    s3: Parity,
    ell: HalfInt,
    m: HalfInt,
    p: DunklParams,
    grid_size: usize,
) -> Result<f64, AngularError> {
    if grid_size < MIN_GRID {
        return domain(format!("grid_size must be at least {MIN_GRID}, got {grid_size}"));
    }
    if grid_size % 2 == 1 {
        return domain(format!(
            "grid_size {grid_size} puts a grid point on theta = pi/2 where the operator is singular"
        ));
    }
    let f = PolarFunction::new(s3, ell, m, p)?;
    let varpi_sq = f.eigenvalue();
    let lambda_sq = azimuthal_eigenvalue(m, &p);
    let h = PI / grid_size as f64;
    let k = 0.5 + p.mu1 + p.mu2;
    let mut worst: f64 = 0.0;
    for j in 0..grid_size {
        let theta = (j as f64 + 0.5) * h;
        let (s, c) = theta.sin_cos();
        let v = f.eval(theta);
        let (d1, d2) = derivatives(|x| f.eval(x), theta, h);
        let r3 = f.eval(PI - theta);
        let jv = d2 + 2.0 * (k * c / s - p.mu3 * s / c) * d1 - p.mu3 / (c * c) * (v - r3);
        worst = worst.max((jv - lambda_sq / (s * s) * v + varpi_sq * v).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: Parity = Parity::Even;
    const O: Parity = Parity::Odd;

    fn h(x: f64) -> HalfInt {
        HalfInt::new(x).unwrap()
    }

    #[test]
    fn half_int_parsing_and_display() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), h(1.5));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::int(2));
        assert_eq!(h(2.5).to_string(), "5/2");
        assert_eq!(h(3.0).to_string(), "3");
        assert!(HalfInt::new(-0.5).is_err());
        assert!(HalfInt::new(0.3).is_err());
        assert!("1/3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn params_reject_below_minus_half() {
        assert!(DunklParams::new(-0.5, 0.0, 0.0).is_err());
        assert!(DunklParams::new(0.0, f64::NAN, 0.0).is_err());
        let p = DunklParams::new(0.1, 0.2, 0.3).unwrap();
        assert_eq!(p.delta(), -(1.0 + p.mu1() + p.mu2() + p.mu3()));
        assert!((p.mu_term() - p.delta() * (p.delta() + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn eigenvalue_examples() {
        let p0 = DunklParams::undeformed();
        let p = DunklParams::uniform(-0.4).unwrap();
        assert_eq!(azimuthal_eigenvalue(HalfInt::ZERO, &p), 0.0);
        assert_eq!(azimuthal_eigenvalue(HalfInt::int(1), &p0), 4.0);
        assert!((azimuthal_eigenvalue(HalfInt::int(1), &p) - 0.8).abs() < 1e-15);
        assert_eq!(polar_eigenvalue(HalfInt::ZERO, HalfInt::ZERO, &p), 0.0);
        assert!((polar_eigenvalue(HalfInt::int(1), HalfInt::int(1), &p) - 10.4).abs() < 1e-14);
    }

    #[test]
    fn undeformed_limits_are_exact() {
        let p = DunklParams::undeformed();
        for tm in 0..8 {
            let m = HalfInt::from_twice(tm);
            assert_eq!(azimuthal_eigenvalue(m, &p), 4.0 * m.value() * m.value());
            for tl in 0..8 {
                let l = HalfInt::from_twice(tl);
                let big_l = 2.0 * (l.value() + m.value());
                assert_eq!(polar_eigenvalue(l, m, &p), big_l * (big_l + 1.0));
            }
        }
    }

    #[test]
    fn sector_index_rules() {
        let p = DunklParams::uniform(0.2).unwrap();
        assert!(AzimuthalFunction::new(E, E, h(0.5), p).is_err());
        assert!(AzimuthalFunction::new(E, O, h(1.0), p).is_err());
        assert!(AzimuthalFunction::new(O, O, h(0.0), p).is_err());
        assert!(PolarFunction::new(O, h(1.0), h(0.0), p).is_err());
        assert!(PolarFunction::new(E, h(0.5), h(0.0), p).is_err());
        let labels = ParityLabels::new(O, E, O);
        assert!(labels.check(h(0.5), h(0.5)).is_ok());
        assert!(labels.check(h(1.0), h(0.5)).is_err());
    }

    #[test]
    fn reflection_parities() {
        let p = DunklParams::new(0.3, 0.1, -0.2).unwrap();
        for (s1, s2, m) in [(E, E, 2.0), (O, O, 2.0), (E, O, 1.5), (O, E, 0.5)] {
            let f = AzimuthalFunction::new(s1, s2, h(m), p).unwrap();
            for k in 0..40 {
                let phi = 0.157 * k as f64 + 0.01;
                let v = f.eval(phi);
                assert!((f.eval(PI - phi) - s1.sign() * v).abs() < 1e-12);
                assert!((f.eval(-phi) - s2.sign() * v).abs() < 1e-12);
            }
        }
        for (s3, ell) in [(E, 1.0), (O, 1.5)] {
            let f = PolarFunction::new(s3, h(ell), h(1.0), p).unwrap();
            for k in 0..30 {
                let theta = 0.1 * k as f64 + 0.03;
                assert!((f.eval(PI - theta) - s3.sign() * f.eval(theta)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ground_states_are_constant() {
        let p = DunklParams::uniform(0.25).unwrap();
        let f = AzimuthalFunction::new(E, E, HalfInt::ZERO, p).unwrap();
        assert!((f.eval(0.3) - f.eval(2.9)).abs() < 1e-15);
        let g = PolarFunction::new(E, HalfInt::ZERO, HalfInt::ZERO, p).unwrap();
        assert!((g.eval(0.3) - g.eval(1.9)).abs() < 1e-15);
    }

    #[test]
    fn unit_norms() {
        let p = DunklParams::new(-0.4, 0.4, 0.0).unwrap();
        let o = QuadOptions::default();
        for (s1, s2, m) in [(E, E, 1.0), (O, O, 3.0), (E, O, 2.5), (O, E, 0.5)] {
            let f = AzimuthalFunction::new(s1, s2, h(m), p).unwrap();
            assert!((azimuthal_inner_product(&f, &f, &o).unwrap() - 1.0).abs() < 1e-10);
        }
        for (s3, ell) in [(E, 2.0), (O, 0.5)] {
            let f = PolarFunction::new(s3, h(ell), h(1.5), p).unwrap();
            assert!((polar_inner_product(&f, &f, &o).unwrap() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn polar_orthogonality() {
        let p = DunklParams::uniform(-0.4).unwrap();
        let o = QuadOptions::default();
        for s3 in [E, O] {
            let base = if s3 == E { 0.0 } else { 0.5 };
            let fs: Vec<_> = (0..4)
                .map(|k| PolarFunction::new(s3, h(base + k as f64), h(1.0), p).unwrap())
                .collect();
            for i in 0..4 {
                for j in 0..i {
                    assert!(polar_inner_product(&fs[i], &fs[j], &o).unwrap().abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn eigen_residuals_small() {
        let p = DunklParams::new(0.3, 0.3, 0.3).unwrap();
        let labels = ParityLabels::new(E, E, E);
        assert!(verify_azimuthal_eigen(labels, h(0.0), p, 256).unwrap() < 1e-10);
        assert!(verify_azimuthal_eigen(labels, h(1.0), p, 2048).unwrap() < 1e-6);
        let labels = ParityLabels::new(O, E, O);
        assert!(verify_azimuthal_eigen(labels, h(0.5), p, 2048).unwrap() < 1e-6);
        assert!(verify_polar_eigen(O, h(1.5), h(0.5), p, 2048).unwrap() < 1e-5);
    }

    #[test]
    fn residual_grid_checks() {
        let p = DunklParams::undeformed();
        assert!(verify_azimuthal_eigen(ParityLabels::EVEN, h(1.0), p, 32).is_err());
        assert!(verify_azimuthal_eigen(ParityLabels::EVEN, h(1.0), p, 66).is_err());
        assert!(verify_polar_eigen(E, h(1.0), h(0.0), p, 65).is_err());
    }

    #[test]
    fn uncorrected_odd_polar_family_fails() {
        // Without the cos θ factor the s3 = −1 candidate is even under R₃ and
        // leaves an O(1) residual.
        let p = DunklParams::new(0.2, 0.2, 0.2).unwrap();
        let (ell, m) = (1.5, 1.0);
        let a = 2.0 * m + 0.4;
        let b = 0.2 + 0.5;
        let g = |t: f64| t.sin().powi(2) * jacobi(1, a, b, (2.0 * t).cos()).unwrap();
        let lambda_sq = azimuthal_eigenvalue(h(m), &p);
        let varpi_sq = polar_eigenvalue(h(ell), h(m), &p);
        let t = 0.8;
        let (d1, d2) = derivatives(g, t, 1e-3);
        let (s, c) = t.sin_cos();
        let jv = d2 + 2.0 * ((0.5 + 0.4) * c / s - 0.2 * s / c) * d1 - 0.2 / (c * c) * (g(t) - g(PI - t));
        let res = (jv - lambda_sq / (s * s) * g(t) + varpi_sq * g(t)).abs();
        assert!(res > 1e-2 * g(t).abs(), "{res}");
    }
}
