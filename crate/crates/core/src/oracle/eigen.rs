//! Finite-difference radial eigensolver.
//!
//! −d²/dχ² + V(χ) on a uniform grid with Dirichlet ends becomes the symmetric
//! tridiagonal matrix with diagonal 2/h² + V(χᵢ) and off-diagonal −1/h². The
//! lowest eigenvalues come from bisection on Sturm sequence counts.

use super::OracleError;
use crate::spectrum::{pekeris_coefficients, Molecule, PekerisVariant};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discretization {
    pub chi_min: f64,
    pub chi_max: f64,
    /// Grid points including both Dirichlet ends.
    pub n_points: usize,
}

pub const DEFAULT_CHI_MIN: f64 = -0.999;
pub const DEFAULT_POINTS: usize = 8192;
/// Largest end-point amplitude, relative to the peak, that counts as contained.
pub const LEAK_TOL: f64 = 1e-8;

impl Discretization {
    pub fn new(chi_min: f64, chi_max: f64, n_points: usize) -> Result<Self, OracleError> {
        if !(chi_min > -1.0 && chi_max > chi_min && chi_max.is_finite()) {
            return Err(OracleError::Domain(format!(
                "need -1 < chi_min < chi_max, got [{chi_min}, {chi_max}]"
            )));
        }
        if n_points < 100 {
            return Err(OracleError::Domain(format!(
                "need at least 100 grid points, got {n_points}"
            )));
        }
        Ok(Self {
            chi_min,
            chi_max,
            n_points,
        })
    }

    /// Starting box for a molecule: χ ∈ [−0.999, 6/α].
    pub fn initial(mol: &Molecule, n_points: usize) -> Result<Self, OracleError> {
        Self::new(DEFAULT_CHI_MIN, DEFAULT_CHI_MIN + 1.0 + 6.0 / mol.alpha, n_points)
    }

    pub fn step(&self) -> f64 {
        (self.chi_max - self.chi_min) / (self.n_points - 1) as f64
    }

    /// Same box with the step halved.
    pub fn refined(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            ..*self
        }
    }

    fn interior(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.step();
        (1..self.n_points - 1).map(move |i| self.chi_min + i as f64 * h)
    }
}

/// Symmetric tridiagonal matrix: `diag[i]` and `off[i]` = A[i, i+1].
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    /// Number of eigenvalues strictly below x.
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.diag.len() {
            let coupling = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            q = self.diag[i] - x - if i == 0 { 0.0 } else { coupling / q };
            if q == 0.0 {
                q = -f64::EPSILON * (self.diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The k lowest eigenvalues, ascending, each bisected to the limit of
    /// floating-point resolution.
    pub fn lowest(&self, k: usize) -> Result<Vec<f64>, OracleError> {
        if k == 0 || k > self.diag.len() {
            return Err(OracleError::Domain(format!(
                "asked for {k} eigenvalues of a {}x{} matrix",
                self.diag.len(),
                self.diag.len()
            )));
        }
        let (lo0, hi0) = self.gershgorin();
        let mut out = Vec::with_capacity(k);
        let mut floor = lo0;
        for j in 0..k {
            let (mut lo, mut hi) = (floor, hi0);
            let mut iterations = 0;
            loop {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if self.count_below(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
                iterations += 1;
                if iterations > 2000 {
                    return Err(OracleError::Convergence {
                        func: "tridiagonal bisection",
                        terms: iterations,
                    });
                }
            }
            let value = 0.5 * (lo + hi);
            out.push(value);
            floor = lo;
        }
        Ok(out)
    }

    /// Eigenvector for an (accurate) eigenvalue by inverse iteration,
    /// normalised to unit max-norm.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.diag.len();
        let scale = self.diag.iter().map(|d| d.abs()).fold(0.0, f64::max).max(1.0);
        let shift = lambda - 1e-10 * scale;
        let mut v = vec![1.0; n];
        for _ in 0..3 {
            v = self.solve_shifted(shift, &v);
            let m = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
            v.iter_mut().for_each(|x| *x /= m);
        }
        v
    }

    /// (A − σ)⁻¹ b by the Thomas algorithm with partial-pivot-free elimination.
    fn solve_shifted(&self, sigma: f64, b: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut denom = self.diag[0] - sigma;
        if denom.abs() < tiny {
            denom = tiny;
        }
        c[0] = if n > 1 { self.off[0] / denom } else { 0.0 };
        d[0] = b[0] / denom;
        for i in 1..n {
            let mut denom = self.diag[i] - sigma - self.off[i - 1] * c[i - 1];
            if denom.abs() < tiny {
                denom = tiny;
            }
            c[i] = if i + 1 < n { self.off[i] / denom } else { 0.0 };
            d[i] = (b[i] - self.off[i - 1] * d[i - 1]) / denom;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d[i] - c[i] * x[i + 1];
        }
        x
    }
}

/// −d²/dχ² + V(χ) on the interior of the grid.
pub fn schrodinger_matrix(potential: impl Fn(f64) -> f64, disc: &Discretization) -> Tridiagonal {
    let h = disc.step();
    let kin = 1.0 / (h * h);
    let diag: Vec<f64> = disc.interior().map(|x| 2.0 * kin + potential(x)).collect();
    let off = vec![-kin; diag.len() - 1];
    Tridiagonal { diag, off }
}

/// Result of a solve: eigenvalues and the largest end-point amplitude among
/// their eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpairs {
    pub values: Vec<f64>,
    pub boundary_amplitude: f64,
}

/// k lowest eigenvalues of −d²/dχ² + V with the boundary-leak check.
pub fn eigensolve_potential(
    potential: impl Fn(f64) -> f64,
    disc: &Discretization,
    k: usize,
) -> Result<Eigenpairs, OracleError> {
    let m = schrodinger_matrix(potential, disc);
    let values = m.lowest(k)?;
    let mut leak: f64 = 0.0;
    for &v in &values {
        let vec = m.eigenvector(v);
        leak = leak.max(vec[0].abs()).max(vec[vec.len() - 1].abs());
    }
    Ok(Eigenpairs {
        values,
        boundary_amplitude: leak,
    })
}

/// How 1/(1+χ)² enters the effective potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Centrifugal {
    Pekeris(PekerisVariant),
    Exact,
}

/// Effective potential in units of P:
/// A·c(χ) + (D/P)(e^{−2αχ} − 2e^{−αχ}) with c the chosen centrifugal form.
pub fn effective_potential(
    mol: &Molecule,
    a: f64,
    centrifugal: Centrifugal,
) -> Result<impl Fn(f64) -> f64, OracleError> {
    let alpha = mol.alpha;
    let dp = mol.depth_ratio();
    let coeffs = match centrifugal {
        Centrifugal::Pekeris(v) => {
            Some(pekeris_coefficients(alpha, v).map_err(|e| OracleError::Domain(e.to_string()))?)
        }
        Centrifugal::Exact => None,
    };
    Ok(move |chi: f64| {
        let e = (-alpha * chi).exp();
        let cent = match &coeffs {
            Some(c) => c.c0 + e * (c.c1 + c.c2 * e),
            None => 1.0 / ((1.0 + chi) * (1.0 + chi)),
        };
        a * cent + dp * e * (e - 2.0)
    })
}

/// k lowest radial eigenvalues in cm⁻¹ on a fixed box.
pub fn radial_eigensolve(
    mol: &Molecule,
    a: f64,
    disc: &Discretization,
    centrifugal: Centrifugal,
    k: usize,
) -> Result<Vec<f64>, OracleError> {
    let v = effective_potential(mol, a, centrifugal)?;
    let pairs = eigensolve_potential(v, disc, k)?;
    if pairs.boundary_amplitude >= LEAK_TOL {
        return Err(OracleError::BoxTooSmall {
            chi_max: disc.chi_max,
            amplitude: pairs.boundary_amplitude,
        });
    }
    Ok(pairs.values.iter().map(|e| e * mol.prefactor).collect())
}

/// As [`radial_eigensolve`], doubling the box length until the leak check
/// passes. The grid step is kept fixed.
pub fn radial_eigensolve_adaptive(
    mol: &Molecule,
    a: f64,
    centrifugal: Centrifugal,
    k: usize,
    n_points: usize,
) -> Result<(Vec<f64>, Discretization), OracleError> {
    let mut disc = Discretization::initial(mol, n_points)?;
    for _ in 0..8 {
        match radial_eigensolve(mol, a, &disc, centrifugal, k) {
            Ok(values) => return Ok((values, disc)),
            Err(OracleError::BoxTooSmall { .. }) => {
                let len = disc.chi_max - disc.chi_min;
                disc = Discretization::new(disc.chi_min, disc.chi_min + 2.0 * len, 2 * disc.n_points - 1)?;
            }
            Err(e) => return Err(e),
        }
    }
    Err(OracleError::BoxTooSmall {
        chi_max: disc.chi_max,
        amplitude: f64::NAN,
    })
}

/// Pekeris level minus the level with the exact centrifugal term, cm⁻¹.
pub fn pekeris_error(
    mol: &Molecule,
    a: f64,
    variant: PekerisVariant,
    n: usize,
    n_points: usize,
) -> Result<f64, OracleError> {
    let (pek, disc) = radial_eigensolve_adaptive(mol, a, Centrifugal::Pekeris(variant), n + 1, n_points)?;
    let exact = radial_eigensolve(mol, a, &disc, Centrifugal::Exact, n + 1)?;
    Ok(pek[n] - exact[n])
}

/// Relative error of the solver against (2n+1)ω for −d²/dx² + ω²x², n < k.
pub fn harmonic_self_test(omega: f64, k: usize, n_points: usize) -> Result<f64, OracleError> {
    // the n = k − 1 turning point is √((2k−1)/ω); past 3.5 of those the
    // eigenfunctions are below 1e-16 of their peak
    let half_width = 3.5 * ((2.0 * k as f64 + 1.0) / omega).sqrt();
    let disc = Discretization {
        chi_min: -half_width,
        chi_max: half_width,
        n_points,
    };
    if n_points < 100 {
        return Err(OracleError::Domain(format!(
            "need at least 100 grid points, got {n_points}"
        )));
    }
    let pairs = eigensolve_potential(|x| omega * omega * x * x, &disc, k)?;
    Ok(pairs
        .values
        .iter()
        .enumerate()
        .map(|(n, e)| (e / ((2 * n + 1) as f64 * omega) - 1.0).abs())
        .fold(0.0, f64::max))
}
