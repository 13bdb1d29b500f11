//! Run configuration: a flat `key = value` file overlaid by command-line flags.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use dunkl_morse::thermo::GridScale;
use dunkl_morse::{DunklParams, HalfInt, Molecule, Parity, ParityLabels, PekerisVariant};

use crate::error::CliError;
use crate::molecules;

pub const KEYS: [&str; 24] = [
    "molecule",
    "prefactor",
    "depth",
    "alpha",
    "mu",
    "mu1",
    "mu2",
    "mu3",
    "mu_total",
    "variant",
    "ell",
    "m",
    "n_min",
    "n_max",
    "s1",
    "s2",
    "s3",
    "tmin",
    "tmax",
    "tpoints",
    "tscale",
    "grid",
    "out",
    "annex",
];

/// Raw settings, keyed by the long flag name with `_` for `-`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings(BTreeMap<String, String>);

fn normalize_key(key: &str) -> String {
    key.trim()
        .trim_start_matches("--")
        .replace('-', "_")
        .to_ascii_lowercase()
}

impl Settings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<(), CliError> {
        let key = normalize_key(key);
        if !KEYS.contains(&key.as_str()) {
            return Err(CliError::config(format!(
                "unknown setting '{key}'; known settings: {}",
                KEYS.join(", ")
            )));
        }
        self.0.insert(key, value.into().trim().to_string());
        Ok(())
    }

    pub fn remove(&mut self, key: &str) {
        self.0.remove(key);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn parse_str(text: &str, origin: &str) -> Result<Self, CliError> {
        let mut s = Settings::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("{origin}:{}: expected 'key = value', got '{raw}'", i + 1)))?;
            s.set(k, v)
                .map_err(|e| CliError::config(format!("{origin}:{}: {e}", i + 1)))?;
        }
        Ok(s)
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse_str(&text, &path.display().to_string())
    }

    /// Entries of `other` replace ours.
    pub fn overlay(&mut self, other: &Settings) {
        for (k, v) in &other.0 {
            self.0.insert(k.clone(), v.clone());
        }
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        match self.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse::<T>()
                .map(Some)
                .map_err(|e| CliError::config(format!("{key} = '{v}': {e}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub molecule: Molecule,
    pub params: DunklParams,
    pub variant: PekerisVariant,
    pub ell: HalfInt,
    pub m: HalfInt,
    pub n_min: u32,
    pub n_max: u32,
    pub labels: ParityLabels,
    pub t_min: f64,
    pub t_max: f64,
    pub t_points: usize,
    pub t_scale: GridScale,
    pub grid: usize,
    pub out: Option<PathBuf>,
    pub annex: Option<PathBuf>,
}

fn parse_parity(key: &str, v: &str) -> Result<Parity, CliError> {
    match v.trim().to_ascii_lowercase().as_str() {
        "+" | "+1" | "1" | "even" => Ok(Parity::Even),
        "-" | "-1" | "odd" => Ok(Parity::Odd),
        _ => Err(CliError::config(format!("{key} = '{v}': expected + or -"))),
    }
}

fn parse_scale(v: &str) -> Result<GridScale, CliError> {
    match v.trim().to_ascii_lowercase().as_str() {
        "log" => Ok(GridScale::Log),
        "lin" | "linear" => Ok(GridScale::Linear),
        _ => Err(CliError::config(format!("tscale = '{v}': expected log or linear"))),
    }
}

fn resolve_molecule(s: &Settings) -> Result<Molecule, CliError> {
    let p = s.parsed::<f64>("prefactor")?;
    let d = s.parsed::<f64>("depth")?;
    let a = s.parsed::<f64>("alpha")?;
    let name = s.get("molecule");
    let base = match name {
        Some(n) => match molecules::lookup(n) {
            Ok(m) => Some(m),
            Err(e) if p.is_none() || d.is_none() || a.is_none() => return Err(e),
            Err(_) => None,
        },
        None if p.is_some() && d.is_some() && a.is_some() => None,
        None => Some(molecules::lookup("H2")?),
    };
    let (name, p, d, a) = match base {
        Some(m) => (
            m.name.clone(),
            p.unwrap_or(m.prefactor),
            d.unwrap_or(m.depth),
            a.unwrap_or(m.alpha),
        ),
        None => (
            name.unwrap_or("custom").to_string(),
            p.unwrap_or_default(),
            d.unwrap_or_default(),
            a.unwrap_or_default(),
        ),
    };
    Ok(Molecule::new(name, p, d, a)?)
}

fn resolve_params(s: &Settings) -> Result<DunklParams, CliError> {
    let all = s.parsed::<f64>("mu")?;
    let total = s.parsed::<f64>("mu_total")?;
    let base = match (all, total) {
        (Some(_), Some(_)) => return Err(CliError::config("give either mu or mu_total, not both")),
        (Some(mu), None) => mu,
        (None, Some(t)) => t / 3.0,
        (None, None) => 0.0,
    };
    let mu1 = s.parsed::<f64>("mu1")?.unwrap_or(base);
    let mu2 = s.parsed::<f64>("mu2")?.unwrap_or(base);
    let mu3 = s.parsed::<f64>("mu3")?.unwrap_or(base);
    Ok(DunklParams::new(mu1, mu2, mu3)?)
}

impl RunConfig {
    pub fn resolve(s: &Settings) -> Result<Self, CliError> {
        let molecule = resolve_molecule(s)?;
        let params = resolve_params(s)?;
        let variant = match s.get("variant") {
            Some(v) => v
                .parse::<PekerisVariant>()
                .map_err(|_| CliError::config(format!("variant = '{v}': expected paper, taylor or tabulated")))?,
            None => PekerisVariant::Paper,
        };
        let ell = s.parsed::<HalfInt>("ell")?.unwrap_or(HalfInt::int(1));
        let m = s.parsed::<HalfInt>("m")?.unwrap_or(HalfInt::int(1));
        let n_min = s.parsed::<u32>("n_min")?.unwrap_or(0);
        let n_max = s.parsed::<u32>("n_max")?.unwrap_or(20);
        if n_max < n_min {
            return Err(CliError::config(format!("n_max = {n_max} is below n_min = {n_min}")));
        }
        let parity =
            |key: &str| -> Result<Parity, CliError> { s.get(key).map_or(Ok(Parity::Even), |v| parse_parity(key, v)) };
        let labels = ParityLabels::new(parity("s1")?, parity("s2")?, parity("s3")?);
        let t_min = s.parsed::<f64>("tmin")?.unwrap_or(100.0);
        let t_max = s.parsed::<f64>("tmax")?.unwrap_or(5000.0);
        if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) {
            return Err(CliError::config(format!(
                "temperature range needs 0 < tmin < tmax, got [{t_min}, {t_max}]"
            )));
        }
        let t_points = s.parsed::<usize>("tpoints")?.unwrap_or(64);
        if t_points < 2 {
            return Err(CliError::config(format!("tpoints = {t_points}: need at least 2")));
        }
        let t_scale = s.get("tscale").map_or(Ok(GridScale::Log), parse_scale)?;
        let grid = s.parsed::<usize>("grid")?.unwrap_or(181);
        if grid < 2 {
            return Err(CliError::config(format!("grid = {grid}: need at least 2 points")));
        }
        Ok(RunConfig {
            molecule,
            params,
            variant,
            ell,
            m,
            n_min,
            n_max,
            labels,
            t_min,
            t_max,
            t_points,
            t_scale,
            grid,
            out: s.get("out").map(PathBuf::from),
            annex: s.get("annex").map(PathBuf::from),
        })
    }

    /// One-line, order-stable summary of the resolved configuration.
    pub fn describe(&self) -> String {
        let mol = &self.molecule;
        let p = &self.params;
        format!(
            "molecule={} P={} D={} alpha={} mu1={} mu2={} mu3={} variant={}",
            mol.name,
            mol.prefactor,
            mol.depth,
            mol.alpha,
            p.mu1(),
            p.mu2(),
            p.mu3(),
            self.variant
        )
    }
}
