use dunkl_morse::thermo::{
    partition_direct, temperature_grid, thermal_functions, thermal_point, thermo_params, GridScale, Partition,
};
use dunkl_morse::{DunklParams, Molecule, PekerisVariant};
use proptest::prelude::*;

fn h2() -> Molecule {
    Molecule::new("H2", 60.8296, 38292.0, 1.440).unwrap()
}

fn hcl() -> Molecule {
    Molecule::new("HCl", 10.5930, 17244.0, 2.380).unwrap()
}

fn direct(mol: &Molecule, mu_total: f64) -> Partition {
    let p = DunklParams::uniform(mu_total / 3.0).unwrap();
    Partition::Direct(thermo_params(mol, &p, PekerisVariant::Paper).unwrap().levels())
}

fn closed(mol: &Molecule, mu_total: f64) -> Partition {
    let p = DunklParams::uniform(mu_total / 3.0).unwrap();
    Partition::Closed(thermo_params(mol, &p, PekerisVariant::Paper).unwrap())
}

#[test]
fn derivatives_agree_with_moments_on_log_grid() {
    let grid = temperature_grid(100.0, 5000.0, 64, GridScale::Log).unwrap();
    for mol in [h2(), hcl()] {
        let pts = thermal_functions(&direct(&mol, 1.2), &grid).unwrap();
        for p in &pts {
            let ex = p.exact.unwrap();
            assert!(((p.u - ex.u) / ex.u).abs() < 1e-6, "{} U at {} K", mol.name, p.t);
            assert!(((p.cv - ex.cv) / ex.cv).abs() < 1e-6, "{} Cv at {} K", mol.name, p.t);
        }
    }
}

#[test]
fn heat_capacity_positive_and_entropy_nondecreasing() {
    let grid = temperature_grid(10.0, 1e4, 200, GridScale::Log).unwrap();
    for mol in [h2(), hcl()] {
        for z in [direct(&mol, 1.2), closed(&mol, 1.2)] {
            let pts = thermal_functions(&z, &grid).unwrap();
            assert!(pts.iter().all(|p| p.cv >= 0.0), "{} {:?}", mol.name, z.method());
            for w in pts.windows(2) {
                assert!(w[1].s >= w[0].s, "{} S drops at {} K", mol.name, w[1].t);
            }
        }
    }
}

#[test]
fn heat_capacity_has_a_single_interior_peak() {
    let grid = temperature_grid(10.0, 1e4, 400, GridScale::Log).unwrap();
    let pts = thermal_functions(&direct(&h2(), 1.2), &grid).unwrap();
    let cv: Vec<f64> = pts.iter().map(|p| p.cv).collect();
    let peak = cv
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap();
    assert!(peak > 0 && peak < cv.len() - 1, "peak at grid end ({} K)", grid[peak]);
    // rises to the peak and falls after it; a plateau of exactly zero heat
    // capacity at the coldest points is allowed
    assert!(cv[..=peak].windows(2).all(|w| w[1] >= w[0]));
    assert!(cv[peak..].windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn deformation_lowers_partition_function() {
    let t = 1000.0;
    let zs: Vec<f64> = [1.2, 4.5, 6.0]
        .iter()
        .map(|&mu| thermal_point(&direct(&h2(), mu), t).unwrap().ln_z)
        .collect();
    assert!(zs[0] > zs[1] && zs[1] > zs[2], "{zs:?}");
}

#[test]
fn closed_form_tracks_direct_sum_when_hot() {
    for mol in [h2(), hcl()] {
        for t in [5000.0, 1e4, 3e4, 1e5] {
            let a = thermal_point(&closed(&mol, 1.2), t).unwrap().ln_z;
            let b = thermal_point(&direct(&mol, 1.2), t).unwrap().ln_z;
            let ratio = (a - b).exp();
            assert!((ratio - 1.0).abs() < 0.10, "{} at {t} K: ratio {ratio}", mol.name);
        }
    }
}

#[test]
fn free_energy_identity() {
    let z = direct(&hcl(), 1.2);
    for t in [150.0, 900.0, 4000.0] {
        let p = thermal_point(&z, t).unwrap();
        // F = U − T S
        assert!((p.f - (p.u - t * p.s)).abs() < 1e-6 * p.u.abs().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn direct_sum_bounds(t in 50.0f64..20000.0, mu in 0.0f64..6.0) {
        let Partition::Direct(levels) = direct(&h2(), mu) else { unreachable!() };
        let beta = dunkl_morse::units::inverse_temperature(t);
        let e0 = levels.iter().cloned().fold(f64::INFINITY, f64::min);
        let z = partition_direct(beta, &levels).unwrap();
        // e^{−βE₀} ≤ Z ≤ N e^{−βE₀}
        let scaled = z * (beta * e0).exp();
        prop_assert!(scaled >= 1.0 - 1e-12 && scaled <= levels.len() as f64 * (1.0 + 1e-12));
    }

    #[test]
    fn mean_energy_within_spectrum(t in 20.0f64..50000.0) {
        let z = direct(&hcl(), 1.2);
        let p = thermal_point(&z, t).unwrap();
        let Partition::Direct(levels) = &z else { unreachable!() };
        let lo = levels.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = levels.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let u = p.exact.unwrap().u;
        prop_assert!(u >= lo - 1e-9 * lo.abs() && u <= hi + 1e-9 * hi.abs());
    }
}
