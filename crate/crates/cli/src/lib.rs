//! Command-line front end: molecule database, configuration handling, CSV
//! emission and the verification suite.

pub mod commands;
pub mod config;
pub mod error;
pub mod molecules;
pub mod output;
pub mod tables;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{RunConfig, Settings};
use crate::error::CliError;
use crate::output::{write_text, CsvTable};
use crate::tables::Verdict;

#[derive(Debug, Parser)]
#[command(
    name = "dunkl-morse",
    version,
    about = "Dunkl-deformed Morse oscillator: spectra, thermodynamics, checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels E(n, ell, m) as CSV
    Spectrum(Common),
    /// Partition function and thermal functions on a temperature grid
    Thermo(Common),
    /// Angular eigenfunctions sampled on a grid
    Angular(Common),
    /// Run every oracle comparison and report pass/fail
    Verify(Common),
    /// Compare against the published energy tables
    ReproduceTables {
        #[command(flatten)]
        common: Common,
        /// Exit with status 4 unless both published sets are reproduced
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// Flat `key = value` file; flags given here take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// H2, HCl or I2, or any name together with --prefactor/--depth/--alpha
    #[arg(long)]
    pub molecule: Option<String>,
    /// Kinetic prefactor P in cm^-1
    #[arg(long)]
    pub prefactor: Option<String>,
    /// Well depth D in cm^-1
    #[arg(long)]
    pub depth: Option<String>,
    /// Morse width parameter
    #[arg(long)]
    pub alpha: Option<String>,
    /// Common value of mu1, mu2 and mu3
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu3: Option<String>,
    /// mu1 + mu2 + mu3, split evenly
    #[arg(long, allow_hyphen_values = true)]
    pub mu_total: Option<String>,
    /// Pekeris coefficients: paper, taylor or tabulated
    #[arg(long)]
    pub variant: Option<String>,
    /// Polar index, integer or half-odd (e.g. 3/2)
    #[arg(long)]
    pub ell: Option<String>,
    /// Azimuthal index, integer or half-odd
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n_min: Option<String>,
    #[arg(long)]
    pub n_max: Option<String>,
    /// Reflection parity labels, + or -
    #[arg(long, allow_hyphen_values = true)]
    pub s1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s3: Option<String>,
    /// Temperatures in K
    #[arg(long)]
    pub tmin: Option<String>,
    #[arg(long)]
    pub tmax: Option<String>,
    #[arg(long)]
    pub tpoints: Option<String>,
    /// log or linear
    #[arg(long)]
    pub tscale: Option<String>,
    /// Sample count of the angular grid
    #[arg(long)]
    pub grid: Option<String>,
    /// Output file (default: standard output)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where reproduce-tables writes its discrepancy annex
    #[arg(long)]
    pub annex: Option<PathBuf>,
}

impl Common {
    pub fn settings(&self) -> Result<Settings, CliError> {
        let mut s = match &self.config {
            Some(path) => Settings::from_file(path)?,
            None => Settings::new(),
        };
        let mut flags = Settings::new();
        let pairs: [(&str, &Option<String>); 21] = [
            ("molecule", &self.molecule),
            ("prefactor", &self.prefactor),
            ("depth", &self.depth),
            ("alpha", &self.alpha),
            ("mu", &self.mu),
            ("mu1", &self.mu1),
            ("mu2", &self.mu2),
            ("mu3", &self.mu3),
            ("mu_total", &self.mu_total),
            ("variant", &self.variant),
            ("ell", &self.ell),
            ("m", &self.m),
            ("n_min", &self.n_min),
            ("n_max", &self.n_max),
            ("s1", &self.s1),
            ("s2", &self.s2),
            ("s3", &self.s3),
            ("tmin", &self.tmin),
            ("tmax", &self.tmax),
            ("tpoints", &self.tpoints),
            ("tscale", &self.tscale),
        ];
        for (k, v) in pairs {
            if let Some(v) = v {
                flags.set(k, v.clone())?;
            }
        }
        if let Some(g) = &self.grid {
            flags.set("grid", g.clone())?;
        }
        for (k, v) in [("out", &self.out), ("annex", &self.annex)] {
            if let Some(p) = v {
                flags.set(k, p.display().to_string())?;
            }
        }
        // a mu given on the command line replaces mu_total from the file, and
        // the other way round
        if flags.get("mu").is_some() || flags.get("mu_total").is_some() {
            s.remove("mu");
            s.remove("mu_total");
        }
        s.overlay(&flags);
        Ok(s)
    }

    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        RunConfig::resolve(&self.settings()?)
    }
}

fn emit(table: &CsvTable, cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = table.render()?;
    match &cfg.out {
        Some(path) => write_text(path, &text),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

/// Runs one command, writing data to `stdout` and diagnostics to `stderr`.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let diag = |stderr: &mut dyn Write, line: &str| {
        // diagnostics are best effort
        let _ = writeln!(stderr, "{line}");
    };
    match &cli.command {
        Command::Spectrum(c) => {
            let cfg = c.resolve()?;
            emit(&commands::cmd_spectrum(&cfg)?, &cfg, stdout)
        }
        Command::Thermo(c) => {
            let cfg = c.resolve()?;
            emit(&commands::cmd_thermo(&cfg)?, &cfg, stdout)
        }
        Command::Angular(c) => {
            let cfg = c.resolve()?;
            emit(&commands::cmd_angular(&cfg)?, &cfg, stdout)
        }
        Command::Verify(c) => {
            let cfg = c.resolve()?;
            let (table, criteria) = commands::cmd_verify(&cfg)?;
            emit(&table, &cfg, stdout)?;
            for crit in &criteria {
                diag(stderr, &crit.status_line());
            }
            let failed: Vec<String> = criteria
                .iter()
                .filter(|c| !c.pass())
                .map(|c| c.number.to_string())
                .collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Numerical(format!("criteria {} failed", failed.join(", "))))
            }
        }
        Command::ReproduceTables { common, strict } => {
            let cfg = common.resolve()?;
            let (table, report) = commands::cmd_reproduce_tables(&cfg)?;
            emit(&table, &cfg, stdout)?;
            let annex = report.annex().render()?;
            match &cfg.annex {
                Some(path) => write_text(path, &annex)?,
                None if *strict && report.needs_annex() => {
                    diag(stderr, "discrepancy annex:");
                    diag(stderr, annex.trim_end());
                }
                None => {}
            }
            for line in report.summary_lines() {
                diag(stderr, &line);
            }
            if *strict {
                if let Some((t, _)) = report.verdicts.iter().find(|(_, v)| *v == Verdict::Fail) {
                    return Err(CliError::Reproduction(format!(
                        "the mu_i={t} levels are not reproduced within 3% by any Pekeris variant"
                    )));
                }
            }
            Ok(())
        }
    }
}
