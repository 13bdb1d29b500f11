use dunkl_morse::angular::{
    azimuthal_inner_product, polar_inner_product, verify_azimuthal_eigen, verify_polar_eigen, AzimuthalFunction,
    PolarFunction,
};
use dunkl_morse::quadrature::QuadOptions;
use dunkl_morse::{DunklParams, HalfInt, Parity, ParityLabels};
use std::f64::consts::PI;

const E: Parity = Parity::Even;
const O: Parity = Parity::Odd;
const SECTORS: [(Parity, Parity); 4] = [(E, E), (O, O), (E, O), (O, E)];
const MUS: [f64; 3] = [-0.4, 0.0, 0.4];

/// Admissible m ≤ `max_twice`/2 of an azimuthal sector.
fn sector_ms(s1: Parity, s2: Parity, max_twice: u32) -> Vec<HalfInt> {
    (0..=max_twice)
        .map(HalfInt::from_twice)
        .filter(|m| m.is_integer() == (s1 == s2))
        .filter(|m| !(s1 == O && s2 == O && m.twice() == 0))
        .collect()
}

fn polar_ells(s3: Parity, max_twice: u32) -> Vec<HalfInt> {
    (0..=max_twice)
        .map(HalfInt::from_twice)
        .filter(|l| l.is_integer() == (s3 == E))
        .collect()
}

#[test]
fn azimuthal_residuals_all_sectors() {
    for &mu in &MUS {
        let p = DunklParams::uniform(mu).unwrap();
        for &(s1, s2) in &SECTORS {
            for m in sector_ms(s1, s2, 6) {
                let r = verify_azimuthal_eigen(ParityLabels::new(s1, s2, E), m, p, 2048).unwrap();
                assert!(r <= 1e-6, "({s1},{s2}) m = {m} mu = {mu}: {r:e}");
            }
        }
    }
}

#[test]
fn polar_residuals_both_parities() {
    for &mu in &MUS {
        let p = DunklParams::uniform(mu).unwrap();
        for &s3 in &[E, O] {
            for m in (0..=6).map(HalfInt::from_twice) {
                for ell in polar_ells(s3, 6) {
                    let r = verify_polar_eigen(s3, ell, m, p, 2048).unwrap();
                    assert!(r <= 1e-5, "s3 = {s3} l = {ell} m = {m} mu = {mu}: {r:e}");
                }
            }
        }
    }
}

#[test]
fn residual_decreases_under_refinement() {
    let p = DunklParams::uniform(0.3).unwrap();
    let m = HalfInt::int(2);
    let coarse = verify_azimuthal_eigen(ParityLabels::EVEN, m, p, 128).unwrap();
    let fine = verify_azimuthal_eigen(ParityLabels::EVEN, m, p, 256).unwrap();
    assert!(fine < coarse / 50.0, "{coarse:e} -> {fine:e}");
}

#[test]
fn azimuthal_orthonormality_within_sector() {
    let opts = QuadOptions::default();
    for &mu in &MUS {
        let p = DunklParams::new(mu, -mu / 2.0, 0.1).unwrap();
        for &(s1, s2) in &SECTORS {
            let fs: Vec<_> = sector_ms(s1, s2, 8)
                .into_iter()
                .map(|m| AzimuthalFunction::new(s1, s2, m, p).unwrap())
                .collect();
            for (i, f) in fs.iter().enumerate() {
                for g in &fs[i..] {
                    let ip = azimuthal_inner_product(f, g, &opts).unwrap();
                    let want = if f.m() == g.m() { 1.0 } else { 0.0 };
                    assert!((ip - want).abs() < 1e-8, "({s1},{s2}) {} {}: {ip}", f.m(), g.m());
                }
            }
        }
    }
}

#[test]
fn sectors_are_mutually_orthogonal() {
    let opts = QuadOptions::default();
    let p = DunklParams::uniform(0.4).unwrap();
    let f = AzimuthalFunction::new(E, E, HalfInt::int(1), p).unwrap();
    let g = AzimuthalFunction::new(O, O, HalfInt::int(1), p).unwrap();
    assert!(azimuthal_inner_product(&f, &g, &opts).unwrap().abs() < 1e-12);
}

#[test]
fn polar_orthonormality_at_fixed_m() {
    let opts = QuadOptions::default();
    for &mu in &MUS {
        let p = DunklParams::uniform(mu).unwrap();
        for m in (0..=4).map(HalfInt::from_twice) {
            let fs: Vec<_> = [E, O]
                .iter()
                .flat_map(|&s3| polar_ells(s3, 6).into_iter().map(move |l| (s3, l)))
                .map(|(s3, l)| PolarFunction::new(s3, l, m, p).unwrap())
                .collect();
            for (i, f) in fs.iter().enumerate() {
                for g in &fs[i..] {
                    let ip = polar_inner_product(f, g, &opts).unwrap();
                    let same = f.ell() == g.ell() && f.parity() == g.parity();
                    let want = if same { 1.0 } else { 0.0 };
                    assert!((ip - want).abs() < 1e-8, "m {m} l {} l' {}: {ip}", f.ell(), g.ell());
                }
            }
        }
    }
}

#[test]
fn reflection_parities() {
    let p = DunklParams::new(0.2, 0.3, -0.1).unwrap();
    for &(s1, s2) in &SECTORS {
        for m in sector_ms(s1, s2, 5) {
            let f = AzimuthalFunction::new(s1, s2, m, p).unwrap();
            for k in 1..20 {
                let phi = 0.31 * k as f64;
                let v = f.eval(phi);
                assert!((f.eval(PI - phi) - s1.sign() * v).abs() < 1e-12);
                assert!((f.eval(-phi) - s2.sign() * v).abs() < 1e-12);
            }
        }
    }
    for &s3 in &[E, O] {
        for ell in polar_ells(s3, 5) {
            let f = PolarFunction::new(s3, ell, HalfInt::from_twice(3), p).unwrap();
            for k in 1..12 {
                let theta = 0.25 * k as f64;
                assert!((f.eval(PI - theta) - s3.sign() * f.eval(theta)).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn singular_grids_are_rejected() {
    let p = DunklParams::undeformed();
    assert!(verify_azimuthal_eigen(ParityLabels::EVEN, HalfInt::ZERO, p, 2050).is_err());
    assert!(verify_polar_eigen(E, HalfInt::ZERO, HalfInt::ZERO, p, 2049).is_err());
    assert!(verify_azimuthal_eigen(ParityLabels::EVEN, HalfInt::ZERO, p, 32).is_err());
}
