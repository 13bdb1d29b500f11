use std::f64::consts::PI;

use dunkl_morse::angular::{AzimuthalFunction, PolarFunction};
use dunkl_morse::spectrum::{level, standard_morse_pekeris};
use dunkl_morse::thermo::{temperature_grid, thermal_functions, thermo_params, GridScale, Partition, ThermoPoint};
use dunkl_morse::SpectralParams;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{flag, num, CsvTable};
use crate::tables::TableReport;
use crate::verify::{self, single_interior_peak, Criterion};
use dunkl_morse::PekerisVariant;

/// Relative tolerance of the undeformed-limit column.
const MORSE_EQUAL_TOL: f64 = 1e-10;

pub fn provenance(command: &str, cfg: &RunConfig, extra: &str) -> String {
    let mut line = format!(
        "dunkl-morse {} {command}: {}",
        env!("CARGO_PKG_VERSION"),
        cfg.describe()
    );
    if !extra.is_empty() {
        line.push(' ');
        line.push_str(extra);
    }
    line
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Result<CsvTable, CliError> {
    let sp = SpectralParams::for_state(&cfg.molecule, &cfg.params, cfg.ell, cfg.m, cfg.variant)?;
    let window = sp.window()?;
    let big_l = 2.0 * (cfg.ell.value() + cfg.m.value());
    let mut t = CsvTable::new(&[
        "n",
        "ell",
        "m",
        "E_cm",
        "E_eV",
        "in_window",
        "bound",
        "E_morse_cm",
        "morse_equal",
    ]);
    t.comment(provenance(
        "spectrum",
        cfg,
        &format!("ell={} m={} n={}..{}", cfg.ell, cfg.m, cfg.n_min, cfg.n_max),
    ));
    t.comment(format!(
        "xi^2={} eta={} K={} window=[{}, {}] bound_levels={}",
        num(sp.xi_sq),
        num(sp.eta),
        num(sp.k()),
        num(window.lower),
        num(window.upper),
        sp.bound_levels()
    ));
    for n in cfg.n_min..=cfg.n_max {
        let lvl = level(&sp, n, cfg.ell, cfg.m)?;
        let morse = standard_morse_pekeris(&cfg.molecule, big_l * (big_l + 1.0), n, &sp.coeffs);
        let equal = ((lvl.e_cm - morse) / morse).abs() <= MORSE_EQUAL_TOL;
        t.push(vec![
            n.to_string(),
            cfg.ell.to_string(),
            cfg.m.to_string(),
            num(lvl.e_cm),
            num(lvl.e_ev),
            flag(lvl.in_window),
            flag(lvl.bound),
            num(morse),
            flag(equal),
        ]);
    }
    Ok(t)
}

pub struct ThermoRun {
    pub closed: Vec<ThermoPoint>,
    pub direct: Vec<ThermoPoint>,
    pub cv_single_peak: bool,
}

pub fn thermo_run(cfg: &RunConfig) -> Result<ThermoRun, CliError> {
    let tp = thermo_params(&cfg.molecule, &cfg.params, cfg.variant)?;
    let grid = temperature_grid(cfg.t_min, cfg.t_max, cfg.t_points, cfg.t_scale)?;
    let direct = thermal_functions(&Partition::Direct(tp.levels()), &grid)?;
    let closed = thermal_functions(&Partition::Closed(tp), &grid)?;
    let cv: Vec<f64> = direct.iter().map(|p| p.cv).collect();
    Ok(ThermoRun {
        closed,
        direct,
        cv_single_peak: single_interior_peak(&cv).is_some(),
    })
}

pub fn cmd_thermo(cfg: &RunConfig) -> Result<CsvTable, CliError> {
    let run = thermo_run(cfg)?;
    let mut t = CsvTable::new(&[
        "T_K",
        "Z_closed",
        "lnZ_closed",
        "Z_direct",
        "lnZ_direct",
        "F_closed_cm",
        "U_closed_cm",
        "S_closed_cm_per_K",
        "Cv_closed_cm_per_K",
        "F_direct_cm",
        "U_direct_cm",
        "S_direct_cm_per_K",
        "Cv_direct_cm_per_K",
        "U_exact_cm",
        "Cv_exact_cm_per_K",
    ]);
    let scale = match cfg.t_scale {
        GridScale::Log => "log",
        GridScale::Linear => "linear",
    };
    t.comment(provenance(
        "thermo",
        cfg,
        &format!(
            "mu_total={} T=[{}, {}] points={} scale={scale}",
            num(cfg.params.mu()),
            num(cfg.t_min),
            num(cfg.t_max),
            cfg.t_points
        ),
    ));
    t.comment(format!("cv_direct_single_peak={}", flag(run.cv_single_peak)));
    for (c, d) in run.closed.iter().zip(&run.direct) {
        let ex = d.exact.expect("direct sums carry exact moments");
        t.push(vec![
            num(c.t),
            num(c.z),
            num(c.ln_z),
            num(d.z),
            num(d.ln_z),
            num(c.f),
            num(c.u),
            num(c.s),
            num(c.cv),
            num(d.f),
            num(d.u),
            num(d.s),
            num(d.cv),
            num(ex.u),
            num(ex.cv),
        ]);
    }
    Ok(t)
}

/// Φ on φⱼ = 2πj/(N−1) and Θ on θⱼ = πj/(N−1).
pub fn cmd_angular(cfg: &RunConfig) -> Result<CsvTable, CliError> {
    let l = cfg.labels;
    l.check(cfg.ell, cfg.m)?;
    let phi_fn = AzimuthalFunction::new(l.s1, l.s2, cfg.m, cfg.params)?;
    let theta_fn = PolarFunction::new(l.s3, cfg.ell, cfg.m, cfg.params)?;
    let mut t = CsvTable::new(&["j", "phi", "Phi", "theta", "Theta", "s1", "s2", "s3", "ell", "m"]);
    t.comment(provenance(
        "angular",
        cfg,
        &format!(
            "sector=({},{},{}) ell={} m={} grid={} lambda^2={} varpi^2={}",
            l.s1,
            l.s2,
            l.s3,
            cfg.ell,
            cfg.m,
            cfg.grid,
            num(phi_fn.eigenvalue()),
            num(theta_fn.eigenvalue())
        ),
    ));
    let last = (cfg.grid - 1) as f64;
    for j in 0..cfg.grid {
        let phi = 2.0 * PI * j as f64 / last;
        let theta = PI * j as f64 / last;
        t.push(vec![
            j.to_string(),
            num(phi),
            num(phi_fn.eval(phi)),
            num(theta),
            num(theta_fn.eval(theta)),
            l.s1.to_string(),
            l.s2.to_string(),
            l.s3.to_string(),
            cfg.ell.to_string(),
            cfg.m.to_string(),
        ]);
    }
    Ok(t)
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<(CsvTable, Vec<Criterion>), CliError> {
    let criteria = verify::all_criteria()?;
    let mut t = verify::report_csv(&criteria);
    t.comment(provenance("verify", cfg, ""));
    Ok((t, criteria))
}

pub fn cmd_reproduce_tables(_cfg: &RunConfig) -> Result<(CsvTable, TableReport), CliError> {
    let report = TableReport::new(&PekerisVariant::ALL)?;
    let mut t = report.to_csv();
    t.comment(format!(
        "dunkl-morse {} reproduce-tables: published levels for l=m=1 at mu_i=-0.4 and +0.4; variants {}",
        env!("CARGO_PKG_VERSION"),
        PekerisVariant::ALL.map(|v| v.name()).join(", ")
    ));
    for line in report.summary_lines() {
        t.comment(line);
    }
    Ok((t, report))
}
