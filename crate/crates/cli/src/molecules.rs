use dunkl_morse::Molecule;

use crate::error::CliError;

/// Name, P (cm⁻¹), D (cm⁻¹), α.
const TABLE: [(&str, f64, f64, f64); 3] = [
    ("H2", 60.8296, 38292.0, 1.440),
    ("HCl", 10.5930, 17244.0, 2.380),
    ("I2", 0.0374, 12550.0, 4954.0),
];

pub fn builtin_molecules() -> Vec<Molecule> {
    TABLE
        .iter()
        .map(|&(name, p, d, a)| Molecule::new(name, p, d, a).expect("built-in constants are positive"))
        .collect()
}

/// Case-insensitive lookup in the built-in table.
pub fn lookup(name: &str) -> Result<Molecule, CliError> {
    let db = builtin_molecules();
    if let Some(m) = db.iter().find(|m| m.name.eq_ignore_ascii_case(name.trim())) {
        return Ok(m.clone());
    }
    let names: Vec<&str> = db.iter().map(|m| m.name.as_str()).collect();
    let wanted = name.trim().to_ascii_lowercase();
    let dist = |n: &str| strsim::levenshtein(&n.to_ascii_lowercase(), &wanted);
    let best = names.iter().map(|n| dist(n)).min().unwrap_or(usize::MAX);
    let close: Vec<&str> = names.iter().copied().filter(|n| best <= 2 && dist(n) == best).collect();
    let mut msg = format!("unknown molecule '{name}'; available: {}", names.join(", "));
    if !close.is_empty() {
        msg.push_str(&format!(" (did you mean {}?)", close.join(" or ")));
    }
    msg.push_str("; or give --prefactor, --depth and --alpha for a custom molecule");
    Err(CliError::config(msg))
}
