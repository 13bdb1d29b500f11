use super::{Accuracy, SpecfunError};

const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Beyond this |x| erfi is formed from Dawson's function instead of its own
/// Maclaurin series.
const ERFI_SERIES_LIMIT: f64 = 5.0;

/// Dawson's function F(x) = e^{−x²} ∫₀ˣ e^{t²} dt.
pub fn dawson(x: f64) -> f64 {
    dawson_with(x, &Accuracy::default()).expect("Dawson continued fraction converges on R")
}

/// Dawson's function through the continued fraction
/// F(x) = x / (1 + 2x² − 4x²/(3 + 2x² − 8x²/(5 + 2x² − …))),
/// evaluated with the modified Lentz algorithm.
pub fn dawson_with(x: f64, acc: &Accuracy) -> Result<f64, SpecfunError> {
    if x.is_nan() {
        return Err(SpecfunError::Domain {
            func: "dawson",
            reason: "NaN argument".into(),
        });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let ax = x.abs();
    if ax > 1e8 {
        // F(x) ~ 1/(2x) (1 + 1/(2x²) + …); the correction is below rounding here
        return Ok(0.5 / x);
    }
    const TINY: f64 = 1e-300;
    let x2 = ax * ax;
    let mut f = 1.0 + 2.0 * x2;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..=acc.max_terms {
        let kf = k as f64;
        let a_k = -4.0 * kf * x2;
        let b_k = 2.0 * kf + 1.0 + 2.0 * x2;
        d = b_k + a_k * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b_k + a_k / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() <= 2.0 * f64::EPSILON {
            return Ok(x.signum() * ax / f);
        }
    }
    Err(SpecfunError::Convergence {
        func: "dawson",
        terms: acc.max_terms,
    })
}

/// Imaginary error function erfi(x) = (2/√π) ∫₀ˣ e^{t²} dt.
pub fn erfi(x: f64) -> Result<f64, SpecfunError> {
    erfi_with(x, &Accuracy::default())
}

/// erfi(x).
///
/// |x| ≤ 5 sums the all-positive Maclaurin series
/// (2/√π) Σ x^{2k+1} / (k! (2k+1)); beyond that erfi(x) = (2/√π) e^{x²} F(x).
/// Overflow (|x| ≳ 26.6) is reported as a range error; use [`erfi_scaled`].
pub fn erfi_with(x: f64, acc: &Accuracy) -> Result<f64, SpecfunError> {
    if x.is_nan() {
        return Err(SpecfunError::Domain {
            func: "erfi",
            reason: "NaN argument".into(),
        });
    }
    let ax = x.abs();
    if ax <= ERFI_SERIES_LIMIT {
        return Ok(x.signum() * TWO_OVER_SQRT_PI * erfi_series(ax, acc)?);
    }
    let scaled = TWO_OVER_SQRT_PI * dawson_with(ax, acc)?;
    let value = (ax * ax + scaled.ln()).exp();
    if value.is_infinite() {
        return Err(SpecfunError::Range { func: "erfi", arg: x });
    }
    Ok(x.signum() * value)
}

/// e^{−x²} erfi(x) = (2/√π) F(x); finite for every real x.
pub fn erfi_scaled(x: f64) -> f64 {
    TWO_OVER_SQRT_PI * dawson(x)
}

/// Σ x^{2k+1} / (k! (2k+1)) for x ≥ 0.
fn erfi_series(x: f64, acc: &Accuracy) -> Result<f64, SpecfunError> {
    let x2 = x * x;
    let mut power = x;
    let mut sum = x;
    for k in 1..=acc.max_terms {
        let kf = k as f64;
        power *= x2 / kf;
        let term = power / (2.0 * kf + 1.0);
        sum += term;
        let ratio = x2 / (kf + 1.0);
        if ratio < 1.0 {
            let tail = term * ratio / (1.0 - ratio);
            if tail <= 0.5 * f64::EPSILON * sum {
                return Ok(sum);
            }
        }
    }
    Err(SpecfunError::Convergence {
        func: "erfi",
        terms: acc.max_terms,
    })
}
