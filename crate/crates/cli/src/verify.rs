//! The acceptance checks, shared by `dunkl-morse verify` and the acceptance
//! test target.

use std::time::{Duration, Instant};

use dunkl_morse::angular::{azimuthal_inner_product, verify_azimuthal_eigen, verify_polar_eigen, AzimuthalFunction};
use dunkl_morse::oracle::eigen::{radial_eigensolve, radial_eigensolve_adaptive, Centrifugal};
use dunkl_morse::oracle::highprec;
use dunkl_morse::oracle::ode::{interior_grid, ode_residual};
use dunkl_morse::quadrature::QuadOptions;
use dunkl_morse::specfun::{dawson, erfi, jacobi, kummer_1f1, ln_gamma};
use dunkl_morse::spectrum::{
    combined_angular, pekeris_coefficients, standard_morse_pekeris, HypergeometricArgument, RadialWavefunction,
};
use dunkl_morse::thermo::{temperature_grid, thermal_functions, thermal_point, thermo_params, GridScale, Partition};
use dunkl_morse::{DunklParams, HalfInt, Molecule, Parity, ParityLabels, PekerisVariant, SpectralParams};

use crate::error::CliError;
use crate::molecules::lookup;
use crate::output::{flag, num, CsvTable};
use crate::tables::{TableReport, Verdict, RELAXED_REL, SETS};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: String,
    pub required: String,
    pub pass: bool,
}

impl Check {
    fn at_most(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Self {
            name: name.into(),
            measured: format!("{value:.3e}"),
            required: format!("<= {limit:e}"),
            pass: value <= limit,
        }
    }

    fn holds(name: impl Into<String>, measured: impl Into<String>, required: impl Into<String>, pass: bool) -> Self {
        Self {
            name: name.into(),
            measured: measured.into(),
            required: required.into(),
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Criterion {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.elapsed <= self.budget
    }

    pub fn status_line(&self) -> String {
        let failed: Vec<&str> = self
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        let mut line = format!(
            "[{}] criterion {}: {} ({:.2} s of {} s)",
            if self.pass() { "PASS" } else { "FAIL" },
            self.number,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        );
        if !failed.is_empty() {
            line.push_str(&format!("; failing: {}", failed.join("; ")));
        }
        if self.elapsed > self.budget {
            line.push_str("; over time budget");
        }
        line
    }
}

fn timed(
    number: u8,
    title: &'static str,
    budget_s: u64,
    body: impl FnOnce(&mut Vec<Check>, &mut Vec<String>) -> Result<(), CliError>,
) -> Result<Criterion, CliError> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    body(&mut checks, &mut notes)?;
    Ok(Criterion {
        number,
        title,
        checks,
        notes,
        elapsed: start.elapsed(),
        budget: Duration::from_secs(budget_s),
    })
}

fn h2() -> Molecule {
    lookup("H2").expect("built-in")
}

fn hcl() -> Molecule {
    lookup("HCl").expect("built-in")
}

fn rel(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

pub fn table_reproduction() -> Result<Criterion, CliError> {
    timed(1, "published energy tables", 1, |checks, notes| {
        let report = TableReport::new(&PekerisVariant::ALL)?;
        notes.extend(report.summary_lines());
        for &(t, verdict) in &report.verdicts {
            let (measured, pass) = match verdict {
                Verdict::Pass(v) => (format!("all entries within 1% via {v}"), true),
                Verdict::Relaxed(v) => (format!("only within 3% via {v}; annex required"), true),
                Verdict::Fail => ("no variant within 3% on every entry".to_string(), false),
            };
            checks.push(Check::holds(
                format!("mu_i={t} levels reproduced by some variant"),
                measured,
                "1% (0.005 eV near zero), 3% with annex",
                pass,
            ));
        }
        for v in [PekerisVariant::Paper, PekerisVariant::TaylorMatched] {
            let worst = report
                .entries
                .iter()
                .flat_map(|e| e.deviations.iter().filter(move |d| d.variant == v))
                .map(|d| d.rel_dev)
                .fold(0.0, f64::max);
            let relaxed: Vec<String> = SETS
                .iter()
                .map(|&t| {
                    let (ok, total) = report.count_within(t, v, RELAXED_REL);
                    format!("mu_i={t} {ok}/{total} within 3%")
                })
                .collect();
            notes.push(format!(
                "{v} alone: worst relative deviation {:.2}%, {}",
                100.0 * worst,
                relaxed.join(", ")
            ));
        }
        Ok(())
    })
}

pub fn morse_reduction() -> Result<Criterion, CliError> {
    timed(2, "undeformed limit equals standard Morse-Pekeris", 1, |checks, _| {
        let p = DunklParams::undeformed();
        for mol in [h2(), hcl()] {
            let mut worst: f64 = 0.0;
            for variant in PekerisVariant::ALL {
                let coeffs = pekeris_coefficients(mol.alpha, variant)?;
                for tl in 0..=6 {
                    let ell = HalfInt::from_twice(tl);
                    for tm in 0..=6 {
                        let m = HalfInt::from_twice(tm);
                        let sp = SpectralParams::for_state(&mol, &p, ell, m, variant)?;
                        let big_l = 2.0 * (ell.value() + m.value());
                        for n in 0..=10 {
                            let reference = standard_morse_pekeris(&mol, big_l * (big_l + 1.0), n, &coeffs);
                            worst = worst.max(rel(sp.energy_cm(n), reference));
                        }
                    }
                }
            }
            checks.push(Check::at_most(
                format!("{} max relative difference", mol.name),
                worst,
                1e-10,
            ));
        }
        Ok(())
    })
}

pub fn eigensolver_agreement() -> Result<Criterion, CliError> {
    timed(3, "finite-difference eigensolver agreement", 30, |checks, notes| {
        let one = HalfInt::int(1);
        let mol = h2();
        for mu in [-0.4, 0.4] {
            let p = DunklParams::uniform(mu)?;
            let a = combined_angular(one, one, &p);
            let sp = SpectralParams::for_state(&mol, &p, one, one, PekerisVariant::Paper)?;
            let cent = Centrifugal::Pekeris(PekerisVariant::Paper);
            let (coarse, disc) = radial_eigensolve_adaptive(&mol, a, cent, 6, 8192)?;
            let fine = radial_eigensolve(&mol, a, &disc.refined(), cent, 6)?;
            let worst = (0..6)
                .map(|n| rel(coarse[n], sp.energy_cm(n as u32)))
                .fold(0.0, f64::max);
            checks.push(Check::at_most(format!("H2 mu_i={mu} n<=5 relative error"), worst, 1e-4));
            let e0 = sp.energy_cm(0);
            let ratio = (coarse[0] - e0) / (fine[0] - e0);
            checks.push(Check::holds(
                format!("H2 mu_i={mu} n=0 error ratio under h-halving"),
                format!("{ratio:.4}"),
                "in [3.5, 4.5]",
                (3.5..=4.5).contains(&ratio),
            ));
            notes.push(format!(
                "mu_i={mu}: chi in [{}, {}], {} points",
                disc.chi_min, disc.chi_max, disc.n_points
            ));
        }
        Ok(())
    })
}

const SECTORS: [(Parity, Parity); 4] = [
    (Parity::Even, Parity::Even),
    (Parity::Odd, Parity::Odd),
    (Parity::Even, Parity::Odd),
    (Parity::Odd, Parity::Even),
];

fn sector_ms(s1: Parity, s2: Parity, max_twice: u32) -> Vec<HalfInt> {
    (0..=max_twice)
        .map(HalfInt::from_twice)
        .filter(|m| m.is_integer() == (s1 == s2))
        .filter(|m| !(s1 == Parity::Odd && s2 == Parity::Odd && m.twice() == 0))
        .collect()
}

pub fn angular_verification() -> Result<Criterion, CliError> {
    timed(4, "angular eigenfunctions and orthogonality", 60, |checks, _| {
        let mut az: f64 = 0.0;
        let mut polar: f64 = 0.0;
        let mut ortho: f64 = 0.0;
        let opts = QuadOptions::default();
        for mu in [-0.4, 0.0, 0.4] {
            let p = DunklParams::uniform(mu)?;
            for &(s1, s2) in &SECTORS {
                for m in sector_ms(s1, s2, 6) {
                    az = az.max(verify_azimuthal_eigen(
                        ParityLabels::new(s1, s2, Parity::Even),
                        m,
                        p,
                        2048,
                    )?);
                }
                let fs = sector_ms(s1, s2, 8)
                    .into_iter()
                    .map(|m| AzimuthalFunction::new(s1, s2, m, p))
                    .collect::<Result<Vec<_>, _>>()?;
                for (i, f) in fs.iter().enumerate() {
                    for g in &fs[i..] {
                        let want = if f.m() == g.m() { 1.0 } else { 0.0 };
                        ortho = ortho.max((azimuthal_inner_product(f, g, &opts)? - want).abs());
                    }
                }
            }
            for s3 in [Parity::Even, Parity::Odd] {
                for tm in 0..=6 {
                    for tl in 0..=6 {
                        let ell = HalfInt::from_twice(tl);
                        if ell.is_integer() != (s3 == Parity::Even) {
                            continue;
                        }
                        polar = polar.max(verify_polar_eigen(s3, ell, HalfInt::from_twice(tm), p, 2048)?);
                    }
                }
            }
        }
        checks.push(Check::at_most("azimuthal residual, four sectors", az, 1e-6));
        checks.push(Check::at_most("polar residual, both parities", polar, 1e-5));
        checks.push(Check::at_most("azimuthal orthonormality defect", ortho, 1e-8));
        Ok(())
    })
}

pub fn wavefunction_residual() -> Result<Criterion, CliError> {
    timed(5, "radial wavefunction residual and nodes", 5, |checks, _| {
        let one = HalfInt::int(1);
        let mol = h2();
        for mu in [-0.4, 0.4] {
            let p = DunklParams::uniform(mu)?;
            let sp = SpectralParams::for_state(&mol, &p, one, one, PekerisVariant::Paper)?;
            let mut worst: f64 = 0.0;
            let mut node_mismatch = Vec::new();
            for n in 0..=3u32 {
                let grid = interior_grid(&sp, n, 600)?;
                worst = worst.max(ode_residual(&sp, n, HypergeometricArgument::TwoGamma, &grid)?);
                let psi = RadialWavefunction::new(&sp, n, HypergeometricArgument::TwoGamma)?;
                let mut samples = Vec::with_capacity(20000);
                for i in 1..20000 {
                    let v = psi.eval(psi.rho_max() * i as f64 / 20000.0)?;
                    if v.abs() > 1e-250 {
                        samples.push(v);
                    }
                }
                let nodes = samples.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
                if nodes != n as usize {
                    node_mismatch.push(format!("n={n}: {nodes}"));
                }
            }
            checks.push(Check::at_most(format!("H2 mu_i={mu} residual n<=3"), worst, 1e-6));
            checks.push(Check::holds(
                format!("H2 mu_i={mu} node count"),
                if node_mismatch.is_empty() {
                    "nodes = n".to_string()
                } else {
                    node_mismatch.join(", ")
                },
                "nodes = n for n<=3",
                node_mismatch.is_empty(),
            ));
        }
        Ok(())
    })
}

fn direct_partition(mol: &Molecule, mu_total: f64) -> Result<Partition, CliError> {
    let p = DunklParams::uniform(mu_total / 3.0)?;
    Ok(Partition::Direct(
        thermo_params(mol, &p, PekerisVariant::Paper)?.levels(),
    ))
}

/// Index of the unique interior maximum of `v`, if `v` rises to it and falls
/// after it.
pub fn single_interior_peak(v: &[f64]) -> Option<usize> {
    let peak = v.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).map(|(i, _)| i)?;
    let unimodal = v[..=peak].windows(2).all(|w| w[1] >= w[0]) && v[peak..].windows(2).all(|w| w[1] <= w[0]);
    (peak > 0 && peak + 1 < v.len() && unimodal).then_some(peak)
}

pub fn thermodynamic_consistency() -> Result<Criterion, CliError> {
    timed(6, "thermodynamic self-consistency", 10, |checks, notes| {
        let grid = temperature_grid(100.0, 5000.0, 64, GridScale::Log)?;
        for mol in [h2(), hcl()] {
            let pts = thermal_functions(&direct_partition(&mol, 1.2)?, &grid)?;
            let mut du: f64 = 0.0;
            let mut dcv: f64 = 0.0;
            for pt in &pts {
                let ex = pt.exact.expect("direct sums carry exact moments");
                du = du.max(rel(pt.u, ex.u));
                dcv = dcv.max(rel(pt.cv, ex.cv));
            }
            checks.push(Check::at_most(
                format!("{} U finite difference vs <E>", mol.name),
                du,
                1e-6,
            ));
            checks.push(Check::at_most(
                format!("{} Cv finite difference vs variance", mol.name),
                dcv,
                1e-6,
            ));
            let cv_ok = pts.iter().all(|p| p.cv >= 0.0);
            let s_ok = pts.windows(2).all(|w| w[1].s >= w[0].s);
            checks.push(Check::holds(
                format!("{} Cv >= 0", mol.name),
                flag(cv_ok),
                "true",
                cv_ok,
            ));
            checks.push(Check::holds(
                format!("{} S nondecreasing", mol.name),
                flag(s_ok),
                "true",
                s_ok,
            ));
        }
        let wide = temperature_grid(10.0, 1e4, 400, GridScale::Log)?;
        let pts = thermal_functions(&direct_partition(&h2(), 1.2)?, &wide)?;
        let cv: Vec<f64> = pts.iter().map(|p| p.cv).collect();
        let peak = single_interior_peak(&cv);
        if let Some(i) = peak {
            notes.push(format!("H2 Cv peaks at {} K", num(wide[i])));
        }
        checks.push(Check::holds(
            "H2 Cv single interior maximum on [10, 1e4] K",
            peak.map_or("none".to_string(), |i| format!("{} K", num(wide[i]))),
            "unique interior maximum",
            peak.is_some(),
        ));
        Ok(())
    })
}

pub fn deformation_trend() -> Result<Criterion, CliError> {
    timed(7, "partition function decreases with deformation", 5, |checks, _| {
        let mus = [1.2, 4.5, 6.0];
        let ln_z = mus
            .iter()
            .map(|&mu| Ok(thermal_point(&direct_partition(&h2(), mu)?, 1000.0)?.ln_z))
            .collect::<Result<Vec<f64>, CliError>>()?;
        let decreasing = ln_z.windows(2).all(|w| w[1] < w[0]);
        let shown: Vec<String> = mus
            .iter()
            .zip(&ln_z)
            .map(|(mu, z)| format!("mu={mu}: ln Z={z:.6}"))
            .collect();
        checks.push(Check::holds(
            "H2 Z at 1000 K",
            shown.join(", "),
            "strictly decreasing",
            decreasing,
        ));
        Ok(())
    })
}

/// Sample grids of the special-function comparison.
pub mod grids {
    pub fn ln_gamma() -> Vec<f64> {
        (0..=120).map(|i| 1e-3 * 1e9f64.powf(i as f64 / 120.0)).collect()
    }

    /// (n, a, b, x)
    pub fn jacobi() -> Vec<(u32, f64, f64, f64)> {
        let ab = [(-0.9, -0.9), (-0.5, 0.5), (0.1, -0.4), (1.3, 2.7), (5.0, 0.2)];
        let mut out = Vec::new();
        for n in (0..=20).step_by(2) {
            for &(a, b) in &ab {
                for k in 0..=8 {
                    out.push((n, a, b, -1.0 + 2.0 * (k as f64 + 0.37) / 9.0));
                }
            }
        }
        out
    }

    /// (a, b, z)
    pub fn kummer() -> Vec<(f64, f64, f64)> {
        let mut out = Vec::new();
        for i in 0..5 {
            for j in 0..4 {
                for k in 0..=12 {
                    out.push((
                        0.1 + 4.9 * i as f64 / 4.0,
                        0.5 + 5.5 * j as f64 / 3.0,
                        -30.0 + 5.0 * k as f64 + 0.013,
                    ));
                }
            }
        }
        out
    }

    pub fn erfi() -> Vec<f64> {
        (0..=100).map(|k| -5.0 + 0.1 * k as f64 + 1e-3).collect()
    }
}

pub fn special_functions() -> Result<Criterion, CliError> {
    timed(8, "special functions against extended precision", 10, |checks, _| {
        let mut worst: f64 = 0.0;
        for x in grids::ln_gamma() {
            worst = worst.max(rel(ln_gamma(x).map_err(num_err)?, highprec::ln_gamma(x)?));
        }
        checks.push(Check::at_most("ln_gamma", worst, 1e-10));

        let mut worst: f64 = 0.0;
        for (n, a, b, x) in grids::jacobi() {
            worst = worst.max(rel(jacobi(n, a, b, x).map_err(num_err)?, highprec::jacobi(n, a, b, x)?));
        }
        checks.push(Check::at_most("jacobi", worst, 1e-10));

        let mut worst: f64 = 0.0;
        for (a, b, z) in grids::kummer() {
            worst = worst.max(rel(
                kummer_1f1(a, b, z).map_err(num_err)?,
                highprec::kummer_1f1(a, b, z)?,
            ));
        }
        checks.push(Check::at_most("kummer_1f1", worst, 1e-10));

        let (mut we, mut wd, mut wi): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for x in grids::erfi() {
            let e = erfi(x).map_err(num_err)?;
            let d = dawson(x);
            we = we.max(rel(e, highprec::erfi(x)?));
            wd = wd.max(rel(d, highprec::dawson(x)?));
            wi = wi.max(rel(2.0 / std::f64::consts::PI.sqrt() * (x * x).exp() * d, e));
        }
        checks.push(Check::at_most("erfi", we, 1e-10));
        checks.push(Check::at_most("dawson", wd, 1e-10));
        checks.push(Check::at_most("erfi = 2/sqrt(pi) exp(x^2) dawson", wi, 1e-12));
        Ok(())
    })
}

fn num_err(e: dunkl_morse::specfun::SpecfunError) -> CliError {
    CliError::Numerical(e.to_string())
}

pub fn all_criteria() -> Result<Vec<Criterion>, CliError> {
    Ok(vec![
        table_reproduction()?,
        morse_reduction()?,
        eigensolver_agreement()?,
        angular_verification()?,
        wavefunction_residual()?,
        thermodynamic_consistency()?,
        deformation_trend()?,
        special_functions()?,
    ])
}

pub fn report_csv(criteria: &[Criterion]) -> CsvTable {
    let mut t = CsvTable::new(&["criterion", "check", "measured", "required", "pass"]);
    for c in criteria {
        for ch in &c.checks {
            t.push(vec![
                c.number.to_string(),
                ch.name.clone(),
                ch.measured.clone(),
                ch.required.clone(),
                flag(ch.pass),
            ]);
        }
    }
    t
}
