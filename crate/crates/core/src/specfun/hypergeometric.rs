use super::{nonpositive_integer, Accuracy, SpecfunError};

/// Kummer's confluent hypergeometric function ₁F₁(a; b; z) with the default
/// [`Accuracy`].
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64, SpecfunError> {
    kummer_1f1_with(a, b, z, &Accuracy::default())
}

/// ₁F₁(a; b; z).
///
/// - a = −n: exact finite sum (Laguerre-type polynomial).
/// - z < 0: Kummer's transformation ₁F₁(a; b; z) = eᶻ ₁F₁(b−a; b; −z), so the
///   series that is summed has no sign alternation from z.
/// - otherwise the direct series.
pub fn kummer_1f1_with(a: f64, b: f64, z: f64, acc: &Accuracy) -> Result<f64, SpecfunError> {
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(domain(format!("non-finite argument ({a}, {b}, {z})")));
    }
    if let Some(n) = nonpositive_integer(a) {
        check_polynomial_b(n, b)?;
        return Ok(polynomial(n, a, b, z));
    }
    if nonpositive_integer(b).is_some() {
        return Err(domain(format!("b = {b} is a non-positive integer")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z < 0.0 {
        let c = b - a;
        let inner = match nonpositive_integer(c) {
            Some(n) => polynomial(n, c, b, -z),
            None => kummer_series(c, b, -z, acc)?,
        };
        return Ok(z.exp() * inner);
    }
    kummer_series(a, b, z, acc)
}

/// Plain Maclaurin series Σ (a)ₖ/(b)ₖ zᵏ/k!, no transformation applied.
///
/// Terminates once the geometric tail bound of the remaining terms drops below
/// the tolerance of `acc`.
pub fn kummer_series(a: f64, b: f64, z: f64, acc: &Accuracy) -> Result<f64, SpecfunError> {
    if nonpositive_integer(b).is_some() {
        return Err(domain(format!("b = {b} is a non-positive integer")));
    }
    let monotone_from = (b - a).abs() - a.min(0.0) + 1.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..acc.max_terms {
        let kf = k as f64;
        let ratio = (a + kf) * z / ((b + kf) * (kf + 1.0));
        term *= ratio;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        // past k > |b − a| − min(a, 0) + 1 the term ratios are non-increasing,
        // so the next ratio bounds the whole tail geometrically
        let next = ((a + kf + 1.0) * z / ((b + kf + 1.0) * (kf + 2.0))).abs();
        if next < 1.0 && kf > monotone_from {
            let tail = term.abs() * next / (1.0 - next);
            if acc.converged(tail, sum) {
                return Ok(sum);
            }
        }
    }
    Err(SpecfunError::Convergence {
        func: "kummer_1f1",
        terms: acc.max_terms,
    })
}

fn check_polynomial_b(n: u64, b: f64) -> Result<(), SpecfunError> {
    if let Some(m) = nonpositive_integer(b) {
        if n > m {
            return Err(domain(format!(
                "b = {b} is a non-positive integer and a = -{n} does not terminate first"
            )));
        }
    }
    Ok(())
}

fn polynomial(n: u64, a: f64, b: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (a + kf) * z / ((b + kf) * (kf + 1.0));
        sum += term;
    }
    sum
}

fn domain(reason: String) -> SpecfunError {
    SpecfunError::Domain {
        func: "kummer_1f1",
        reason,
    }
}
