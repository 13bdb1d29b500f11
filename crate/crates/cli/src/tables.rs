//! Published energy levels (eV) for ℓ = m = 1 and the comparison against the
//! closed-form spectrum.

use dunkl_morse::spectrum::{energy, PekerisVariant};
use dunkl_morse::{DunklParams, HalfInt};

use crate::error::CliError;
use crate::molecules::lookup;
use crate::output::{flag, num, CsvTable};

/// The two published sets, μᵢ = ∓0.4.
pub const SETS: [f64; 2] = [-0.4, 0.4];

pub const LEVELS: [u32; 11] = [0, 3, 7, 10, 13, 15, 16, 17, 18, 19, 20];

/// (μᵢ, molecule, energies at [`LEVELS`]).
const PUBLISHED: [(f64, &str, [f64; 11]); 6] = [
    (
        -0.4,
        "H2",
        [
            -3.99223, -2.62833, -1.24766, -0.54057, -0.114969, 0.0123821, 0.0291423, 0.0146258, -0.0311674, -0.108237,
            -0.216584,
        ],
    ),
    (
        -0.4,
        "HCl",
        [
            -1.97218,
            -1.31169,
            -0.639328,
            -0.29128,
            -0.0771368,
            -0.00876624,
            0.00310151,
            0.0000909185,
            -0.017798,
            -0.0505653,
            -0.0982109,
        ],
    ),
    (
        -0.4,
        "I2",
        [
            -16.6989, -1302.44, -6203.1, -12268.8, -20382.0, -26929.1, -30544.0, -34386.5, -38456.6, -42754.4, -47279.7,
        ],
    ),
    (
        0.4,
        "H2",
        [
            -3.08793, -1.89144, -0.733998, -0.194321, 0.0638656, 0.0796061, 0.0405612, -0.0297604, -0.131359,
            -0.264234, -0.428386,
        ],
    ),
    (
        0.4,
        "HCl",
        [
            -1.88912, -1.2426, -0.588979, -0.25495, -0.0548261, 0.00419822, 0.0113929, 0.00370922, -0.0188528,
            -0.0562931, -0.108612,
        ],
    ),
    (
        0.4,
        "I2",
        [
            -16.6988, -1302.44, -6203.1, -12268.4, -20382.0, -26929.1, -30544.0, -34386.5, -38456.6, -42754.4, -47279.7,
        ],
    ),
];

pub const TARGET_REL: f64 = 0.01;
pub const RELAXED_REL: f64 = 0.03;
/// Absolute tolerance (eV) for entries close to zero.
pub const ABS_FLOOR_EV: f64 = 0.005;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedEntry {
    pub mu: f64,
    pub molecule: &'static str,
    pub n: u32,
    pub expected_ev: f64,
}

pub fn published_entries() -> Vec<PublishedEntry> {
    PUBLISHED
        .iter()
        .flat_map(|&(mu, molecule, values)| {
            LEVELS.iter().zip(values).map(move |(&n, expected_ev)| PublishedEntry {
                mu,
                molecule,
                n,
                expected_ev,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    pub variant: PekerisVariant,
    pub computed_ev: f64,
    pub abs_dev: f64,
    pub rel_dev: f64,
}

impl Deviation {
    pub fn within(&self, rel_tol: f64) -> bool {
        self.rel_dev <= rel_tol || self.abs_dev <= ABS_FLOOR_EV
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparedEntry {
    pub entry: PublishedEntry,
    pub deviations: Vec<Deviation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Some variant meets the 1% target on every entry of the set.
    Pass(PekerisVariant),
    /// Only the 3% relaxation is met; the annex lists the offending entries.
    Relaxed(PekerisVariant),
    Fail,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub entries: Vec<ComparedEntry>,
    pub verdicts: Vec<(f64, Verdict)>,
}

pub fn compare_entry(entry: PublishedEntry, variant: PekerisVariant) -> Result<Deviation, CliError> {
    let mol = lookup(entry.molecule)?;
    let p = DunklParams::uniform(entry.mu)?;
    let one = HalfInt::int(1);
    let computed_ev = energy(&mol, &p, entry.n, one, one, variant)?.e_ev;
    let abs_dev = (computed_ev - entry.expected_ev).abs();
    Ok(Deviation {
        variant,
        computed_ev,
        abs_dev,
        rel_dev: abs_dev / entry.expected_ev.abs(),
    })
}

impl TableReport {
    pub fn new(variants: &[PekerisVariant]) -> Result<Self, CliError> {
        let entries = published_entries()
            .into_iter()
            .map(|entry| {
                let deviations = variants
                    .iter()
                    .map(|&v| compare_entry(entry, v))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ComparedEntry { entry, deviations })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let verdicts = SETS
            .iter()
            .map(|&t| {
                let all_within = |k: usize, tol: f64| {
                    entries
                        .iter()
                        .filter(|e| e.entry.mu == t)
                        .all(|e| e.deviations[k].within(tol))
                };
                let pass = (0..variants.len()).find(|&k| all_within(k, TARGET_REL));
                let relaxed = (0..variants.len()).find(|&k| all_within(k, RELAXED_REL));
                let verdict = match (pass, relaxed) {
                    (Some(k), _) => Verdict::Pass(variants[k]),
                    (None, Some(k)) => Verdict::Relaxed(variants[k]),
                    (None, None) => Verdict::Fail,
                };
                (t, verdict)
            })
            .collect();
        Ok(Self { entries, verdicts })
    }

    pub fn count_within(&self, mu: f64, variant: PekerisVariant, tol: f64) -> (usize, usize) {
        let rows: Vec<_> = self.entries.iter().filter(|e| e.entry.mu == mu).collect();
        let ok = rows
            .iter()
            .filter(|e| e.deviations.iter().any(|d| d.variant == variant && d.within(tol)))
            .count();
        (ok, rows.len())
    }

    pub fn needs_annex(&self) -> bool {
        self.verdicts.iter().any(|(_, v)| !matches!(v, Verdict::Pass(_)))
    }

    pub fn summary_lines(&self) -> Vec<String> {
        let variants: Vec<PekerisVariant> = self.entries[0].deviations.iter().map(|d| d.variant).collect();
        let mut lines = Vec::new();
        for &(t, verdict) in &self.verdicts {
            let counts: Vec<String> = variants
                .iter()
                .map(|&v| {
                    let (ok, total) = self.count_within(t, v, TARGET_REL);
                    format!("{v} {ok}/{total}")
                })
                .collect();
            let verdict = match verdict {
                Verdict::Pass(v) => format!("pass at 1% via {v}"),
                Verdict::Relaxed(v) => format!("relaxed to 3% via {v} (see annex)"),
                Verdict::Fail => "fail".to_string(),
            };
            lines.push(format!(
                "mu_i={t}: within 1% or {ABS_FLOOR_EV} eV: {}; {verdict}",
                counts.join(", ")
            ));
        }
        lines
    }

    pub fn to_csv(&self) -> CsvTable {
        let variants: Vec<PekerisVariant> = self.entries[0].deviations.iter().map(|d| d.variant).collect();
        let mut header = vec!["molecule".to_string(), "mu_i".into(), "n".into(), "expected_eV".into()];
        for v in &variants {
            for col in ["eV", "abs_dev", "rel_dev", "within_1pct"] {
                header.push(format!("{v}_{col}"));
            }
        }
        let mut t = CsvTable {
            header,
            ..CsvTable::default()
        };
        for e in &self.entries {
            let mut row = vec![
                e.entry.molecule.to_string(),
                num(e.entry.mu),
                e.entry.n.to_string(),
                num(e.entry.expected_ev),
            ];
            for d in &e.deviations {
                row.extend([
                    num(d.computed_ev),
                    num(d.abs_dev),
                    num(d.rel_dev),
                    flag(d.within(TARGET_REL)),
                ]);
            }
            t.push(row);
        }
        t
    }

    /// Every (entry, variant) pair outside the 1% target.
    pub fn annex(&self) -> CsvTable {
        let mut t = CsvTable::new(&[
            "molecule",
            "mu_i",
            "n",
            "expected_eV",
            "variant",
            "computed_eV",
            "abs_dev",
            "rel_dev",
            "within_3pct",
        ]);
        for e in &self.entries {
            for d in e.deviations.iter().filter(|d| !d.within(TARGET_REL)) {
                t.push(vec![
                    e.entry.molecule.to_string(),
                    num(e.entry.mu),
                    e.entry.n.to_string(),
                    num(e.entry.expected_ev),
                    d.variant.to_string(),
                    num(d.computed_ev),
                    num(d.abs_dev),
                    num(d.rel_dev),
                    flag(d.within(RELAXED_REL)),
                ]);
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixty_six_entries() {
        let e = published_entries();
        assert_eq!(e.len(), 66);
        assert_eq!(e.iter().filter(|x| x.mu == -0.4).count(), 33);
        let first = e[0];
        assert_eq!((first.molecule, first.n, first.expected_ev), ("H2", 0, -3.99223));
    }

    #[test]
    fn report_rows_carry_every_variant() {
        let r = TableReport::new(&PekerisVariant::ALL).unwrap();
        assert_eq!(r.entries.len(), 66);
        assert!(r.entries.iter().all(|e| e.deviations.len() == 3));
        let csv = r.to_csv();
        assert_eq!(csv.header.len(), 4 + 3 * 4);
    }
}
