use super::SpecfunError;

fn check_params(a: f64, b: f64) -> Result<(), SpecfunError> {
    if a > -1.0 && b > -1.0 {
        Ok(())
    } else {
        Err(SpecfunError::Domain {
            func: "jacobi",
            reason: format!("parameters must exceed -1, got a = {a}, b = {b}"),
        })
    }
}

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64, SpecfunError> {
    check_params(a, b)?;
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for k in 1..n {
        let next = step(k, a, b, x, cur, prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// P_0 … P_n at one point, reusing a single recurrence sweep.
pub fn jacobi_all(n: u32, a: f64, b: f64, x: f64) -> Result<Vec<f64>, SpecfunError> {
    check_params(a, b)?;
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(1.0);
    if n == 0 {
        return Ok(out);
    }
    out.push(0.5 * (a - b) + 0.5 * (a + b + 2.0) * x);
    for k in 1..n as usize {
        let next = step(k as u32, a, b, x, out[k], out[k - 1]);
        out.push(next);
    }
    Ok(out)
}

/// P_{k+1} from P_k and P_{k−1}; requires k ≥ 1 so that 2k + a + b > 0.
#[inline]
fn step(k: u32, a: f64, b: f64, x: f64, pk: f64, pkm1: f64) -> f64 {
    let k = k as f64;
    let s = 2.0 * k + a + b;
    let a1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s;
    let a2 = (s + 1.0) * (a * a - b * b);
    let a3 = s * (s + 1.0) * (s + 2.0);
    let a4 = 2.0 * (k + a) * (k + b) * (s + 2.0);
    ((a2 + a3 * x) * pk - a4 * pkm1) / a1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees_closed_form() {
        for &(a, b, x) in &[(0.1, -0.4, 0.3), (2.0, 0.5, -0.9), (-0.9, -0.9, 1.0)] {
            assert_eq!(jacobi(0, a, b, x).unwrap(), 1.0);
            let p1 = (a - b) / 2.0 + (a + b + 2.0) * x / 2.0;
            assert!((jacobi(1, a, b, x).unwrap() - p1).abs() < 1e-15);
        }
    }

    #[test]
    fn legendre_special_case() {
        // P_3(x) = (5x³ − 3x)/2
        let x = 0.37;
        let expect = 0.5 * (5.0 * x * x * x - 3.0 * x);
        assert!((jacobi(3, 0.0, 0.0, x).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn endpoint_value_is_binomial() {
        // P_n^{(a,b)}(1) = (a+1)_n / n!
        let (n, a, b) = (7, 0.3, 1.7);
        let mut expect = 1.0;
        for k in 0..n {
            expect *= (a + 1.0 + k as f64) / (k as f64 + 1.0);
        }
        let got = jacobi(n, a, b, 1.0).unwrap();
        assert!((got - expect).abs() < 1e-13 * expect);
    }

    #[test]
    fn all_matches_single() {
        let all = jacobi_all(9, 0.2, -0.3, 0.45).unwrap();
        for (n, v) in all.iter().enumerate() {
            assert_eq!(*v, jacobi(n as u32, 0.2, -0.3, 0.45).unwrap());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(jacobi(2, -1.0, 0.0, 0.1).is_err());
        assert!(jacobi(2, 0.0, -1.5, 0.1).is_err());
    }
}
