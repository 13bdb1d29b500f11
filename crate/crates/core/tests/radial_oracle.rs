use dunkl_morse::oracle::eigen::{radial_eigensolve, radial_eigensolve_adaptive, Centrifugal};
use dunkl_morse::oracle::ode::{interior_grid, ode_residual};
use dunkl_morse::oracle::pekeris_error;
use dunkl_morse::spectrum::{combined_angular, HypergeometricArgument, RadialWavefunction};
use dunkl_morse::{DunklParams, HalfInt, Molecule, PekerisVariant, SpectralParams};

fn h2() -> Molecule {
    Molecule::new("H2", 60.8296, 38292.0, 1.440).unwrap()
}

#[test]
fn eigensolver_matches_closed_form_with_second_order_convergence() {
    let one = HalfInt::int(1);
    for mu in [-0.4, 0.4] {
        let p = DunklParams::uniform(mu).unwrap();
        let a = combined_angular(one, one, &p);
        let sp = SpectralParams::for_state(&h2(), &p, one, one, PekerisVariant::Paper).unwrap();
        let variant = Centrifugal::Pekeris(PekerisVariant::Paper);
        let (coarse, disc) = radial_eigensolve_adaptive(&h2(), a, variant, 6, 8192).unwrap();
        let fine = radial_eigensolve(&h2(), a, &disc.refined(), variant, 6).unwrap();
        for n in 0..6 {
            let exact = sp.energy_cm(n as u32);
            let e1 = coarse[n] - exact;
            let e2 = fine[n] - exact;
            println!("mu {mu} n {n}: rel {:.3e}, ratio {:.4}", (e1 / exact).abs(), e1 / e2);
            assert!((e1 / exact).abs() < 1e-4);
            if n == 0 {
                let ratio = e1 / e2;
                assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
            }
        }
    }
}

#[test]
fn pekeris_error_grows_with_angular_momentum() {
    let p = DunklParams::uniform(-0.4).unwrap();
    let m = HalfInt::ZERO;
    let mut last = 0.0;
    for l in 1..=10 {
        let a = combined_angular(HalfInt::int(l), m, &p);
        let err = pekeris_error(&h2(), a, PekerisVariant::TaylorMatched, 0, 4096)
            .unwrap()
            .abs();
        println!("l {l}: {err:e}");
        assert!(err > last);
        last = err;
    }
}

#[test]
fn wavefunctions_solve_the_radial_equation_and_count_nodes() {
    let p = DunklParams::uniform(-0.4).unwrap();
    let one = HalfInt::int(1);
    let sp = SpectralParams::for_state(&h2(), &p, one, one, PekerisVariant::Paper).unwrap();
    for n in 0..=5u32 {
        let grid = interior_grid(&sp, n, 600).unwrap();
        let r = ode_residual(&sp, n, HypergeometricArgument::TwoGamma, &grid).unwrap();
        println!("n {n}: residual {r:e}");
        if n <= 3 {
            assert!(r < 1e-6);
        }
        let psi = RadialWavefunction::new(&sp, n, HypergeometricArgument::TwoGamma).unwrap();
        let samples: Vec<f64> = (1..20000)
            .map(|i| psi.eval(psi.rho_max() * i as f64 / 20000.0).unwrap())
            .filter(|v| v.abs() > 1e-250)
            .collect();
        let nodes = samples.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
        assert_eq!(nodes, n as usize);
    }
}
