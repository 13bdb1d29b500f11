use std::sync::OnceLock;

use super::SpecfunError;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// B₂ₖ / (2k(2k−1)) for k = 1..=10, the Stirling series coefficients.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

const TAYLOR_TERMS: usize = 64;

/// ln Γ(x) for x > 0.
///
/// Near the zeros of ln Γ at x = 1 and x = 2 a Taylor series in ζ(k) keeps the
/// result relatively accurate; elsewhere a shifted Stirling series is used.
pub fn ln_gamma(x: f64) -> Result<f64, SpecfunError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecfunError::Domain {
            func: "ln_gamma",
            reason: format!("x must be finite and positive, got {x}"),
        });
    }
    Ok(if x < 0.5 {
        ln_gamma_1p(x) - x.ln()
    } else if x < 1.5 {
        ln_gamma_1p(x - 1.0)
    } else if x < 2.5 {
        let z = x - 2.0;
        z.ln_1p() + ln_gamma_1p(z)
    } else {
        ln_gamma_stirling(x)
    })
}

/// ln Γ(1 + z) = −γz + Σ_{k≥2} (−1)ᵏ ζ(k) zᵏ / k, valid for |z| ≤ 1/2 here.
fn ln_gamma_1p(z: f64) -> f64 {
    let zeta = zeta_table();
    let mut power = -z;
    let mut tail = 0.0;
    let mut terms = Vec::with_capacity(TAYLOR_TERMS);
    for (k, zk) in zeta.iter().enumerate().skip(2) {
        power *= -z;
        let term = zk * power / k as f64;
        terms.push(term);
        if term.abs() < 1e-18 * z.abs() {
            break;
        }
    }
    // smallest terms first
    for term in terms.iter().rev() {
        tail += term;
    }
    -EULER_GAMMA * z + tail
}

fn ln_gamma_stirling(x: f64) -> f64 {
    let mut y = x;
    let mut product = 1.0;
    while y < 12.0 {
        product *= y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut power = inv;
    for c in STIRLING {
        series += c * power;
        power *= inv2;
    }
    let ln_gamma_y = (y - 0.5) * y.ln() - y + HALF_LN_TWO_PI + series;
    ln_gamma_y - product.ln()
}

/// ζ(k) for k = 0..TAYLOR_TERMS (entries 0 and 1 unused), Euler–Maclaurin
/// with cutoff N = 10.
fn zeta_table() -> &'static [f64; TAYLOR_TERMS] {
    static TABLE: OnceLock<[f64; TAYLOR_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // B₂ⱼ / (2j)!
        const B_OVER_FACT: [f64; 8] = [
            1.0 / 12.0,
            -1.0 / 720.0,
            1.0 / 30_240.0,
            -1.0 / 1_209_600.0,
            1.0 / 47_900_160.0,
            -691.0 / 1_307_674_368_000.0,
            1.0 / 74_724_249_600.0,
            -3617.0 / 10_670_622_842_880_000.0,
        ];
        let n = 10.0_f64;
        let mut table = [0.0; TAYLOR_TERMS];
        for (k, slot) in table.iter_mut().enumerate().skip(2) {
            let s = k as f64;
            let mut correction = 0.0;
            let mut rising = s;
            let mut npow = n.powf(-s - 1.0);
            for (j, c) in B_OVER_FACT.iter().enumerate() {
                correction += c * rising * npow;
                let j = j as f64;
                rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
                npow /= n * n;
            }
            let mut head = 0.0;
            for m in (2..10).rev() {
                head += (m as f64).powf(-s);
            }
            *slot = 1.0 + head + n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + correction;
        }
        table
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_points() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
        let half = ln_gamma(0.5).unwrap();
        assert!((half - 0.572_364_942_924_700_1).abs() < 1e-15);
        // Γ(5) = 24
        assert!((ln_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn zeta_values() {
        let z = zeta_table();
        let pi2 = std::f64::consts::PI.powi(2);
        assert!((z[2] - pi2 / 6.0).abs() < 1e-15);
        assert!((z[3] - 1.202_056_903_159_594_3).abs() < 1e-15);
        assert!((z[4] - pi2 * pi2 / 90.0).abs() < 1e-15);
        assert!((z[40] - 1.0).abs() < 1e-11);
    }

    #[test]
    fn branches_agree_at_seams() {
        for &x in &[0.5, 1.5, 2.5] {
            let below = ln_gamma(x - 1e-12).unwrap();
            let above = ln_gamma(x + 1e-12).unwrap();
            assert!((below - above).abs() < 1e-11, "seam at {x}: {below} vs {above}");
        }
        // recurrence ln Γ(x+1) = ln Γ(x) + ln x across the Stirling boundary
        for &x in &[2.4, 3.7, 11.5, 12.5] {
            let lhs = ln_gamma(x + 1.0).unwrap();
            let rhs = ln_gamma(x).unwrap() + x.ln();
            assert!((lhs - rhs).abs() < 1e-13 * lhs.abs().max(1.0));
        }
    }

    #[test]
    fn rejects_non_positive() {
        assert!(matches!(ln_gamma(0.0), Err(SpecfunError::Domain { .. })));
        assert!(ln_gamma(-1.5).is_err());
        assert!(ln_gamma(f64::NAN).is_err());
    }
}
