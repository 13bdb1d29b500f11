//! Extended-precision references (256-bit binary floats, about 77 digits).
//!
//! Every routine here is a plain series or explicit sum with no
//! transformations, so it shares no algorithm with the production kernels in
//! [`crate::specfun`].

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;

use super::OracleError;

type Hp = FBig<HalfEven>;

const PREC: usize = 256;
const MAX_TERMS: usize = 200_000;

fn hp(x: f64) -> Hp {
    Hp::try_from(x)
        .expect("finite f64 converts exactly")
        .with_precision(PREC)
        .value()
}

fn int(n: i64) -> Hp {
    Hp::from(n).with_precision(PREC).value()
}

fn to_f64(x: &Hp) -> f64 {
    x.to_f64().value()
}

fn is_negligible(term: &Hp, sum: &Hp) -> bool {
    // |term| < 2^{8-PREC} |sum|, compared as a ratio so huge sums stay finite
    if to_f64(term) == 0.0 && to_f64(sum) != 0.0 {
        return true;
    }
    let ratio = to_f64(&(term.clone() / sum.clone())).abs();
    ratio < 2f64.powi(8 - PREC as i32)
}

/// atan(1/k) by its alternating Maclaurin series.
fn atan_inv(k: i64) -> Hp {
    let kk = int(k * k);
    let mut power = int(1) / int(k);
    let mut sum = power.clone();
    let mut j = 1i64;
    loop {
        power /= kk.clone();
        let term = power.clone() / int(2 * j + 1);
        if is_negligible(&term, &sum) {
            return sum;
        }
        sum = if j % 2 == 1 { sum - term } else { sum + term };
        j += 1;
    }
}

/// π by Machin's formula.
fn pi() -> Hp {
    int(16) * atan_inv(5) - int(4) * atan_inv(239)
}

/// P_n^{(a,b)}(x) = Σₛ C(n+a, n−s) C(n+b, s) ((x−1)/2)ˢ ((x+1)/2)^{n−s}.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64, OracleError> {
    if !(a > -1.0 && b > -1.0) {
        return Err(OracleError::Domain(format!("jacobi parameters a = {a}, b = {b}")));
    }
    let (a, b, x) = (hp(a), hp(b), hp(x));
    let half = int(1) / int(2);
    let xm = (x.clone() - int(1)) * half.clone();
    let xp = (x + int(1)) * half;
    let n = n as i64;
    // C(n + c, j) = Π_{i=1..j} (n + c − j + i)/i
    let binom = |c: &Hp, j: i64| -> Hp {
        let mut v = int(1);
        for i in 1..=j {
            v = v * (c.clone() + int(n - j + i)) / int(i);
        }
        v
    };
    let mut sum = int(0);
    for s in 0..=n {
        let mut term = binom(&a, n - s) * binom(&b, s);
        for _ in 0..s {
            term *= xm.clone();
        }
        for _ in 0..(n - s) {
            term *= xp.clone();
        }
        sum += term;
    }
    Ok(to_f64(&sum))
}

/// Σₖ (a)ₖ/(b)ₖ zᵏ/k!, summed as is.
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64, OracleError> {
    if b <= 0.0 && b.fract() == 0.0 {
        return Err(OracleError::Domain(format!("1F1 with b = {b}")));
    }
    let (ah, bh, zh) = (hp(a), hp(b), hp(z));
    let mut term = int(1);
    let mut sum = int(1);
    for k in 0..MAX_TERMS as i64 {
        let kk = int(k);
        term = term * (ah.clone() + kk.clone()) * zh.clone() / ((bh.clone() + kk) * int(k + 1));
        sum += term.clone();
        let terminated = to_f64(&term) == 0.0;
        // the ratio |(a+k)z/((b+k)(k+1))| decreases once k exceeds |z| + |a| + |b|
        let past_peak = (k as f64) > z.abs() + a.abs() + b.abs();
        if terminated || (past_peak && is_negligible(&term, &sum)) {
            return Ok(to_f64(&sum));
        }
    }
    Err(OracleError::Convergence {
        func: "1f1",
        terms: MAX_TERMS,
    })
}

/// (2/√π) Σ x^{2k+1}/(k!(2k+1)), and the series sum S itself.
fn erfi_parts(x: f64) -> Result<(Hp, Hp), OracleError> {
    let xh = hp(x);
    let x2 = xh.clone() * xh.clone();
    let mut power = xh.clone();
    let mut sum = xh;
    for k in 1..MAX_TERMS as i64 {
        power = power * x2.clone() / int(k);
        let term = power.clone() / int(2 * k + 1);
        sum += term.clone();
        if (k as f64) > x * x && is_negligible(&term, &sum) {
            let scale = int(2) / pi().sqrt();
            return Ok((scale * sum.clone(), sum));
        }
    }
    Err(OracleError::Convergence {
        func: "erfi",
        terms: MAX_TERMS,
    })
}

pub fn erfi(x: f64) -> Result<f64, OracleError> {
    Ok(to_f64(&erfi_parts(x)?.0))
}

/// F(x) = e^{−x²} Σ x^{2k+1}/(k!(2k+1)).
pub fn dawson(x: f64) -> Result<f64, OracleError> {
    let (_, s) = erfi_parts(x)?;
    let xh = hp(x);
    Ok(to_f64(&((-(xh.clone() * xh)).exp() * s)))
}

/// e^{−x²} erfi(x) for large x where erfi itself leaves the f64 range.
pub fn erfi_scaled(x: f64) -> Result<f64, OracleError> {
    let (e, _) = erfi_parts(x)?;
    let xh = hp(x);
    Ok(to_f64(&((-(xh.clone() * xh)).exp() * e)))
}

/// (numerator, denominator) of B₂, B₄, …, B₃₀.
const BERNOULLI: [(i64, i64); 15] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
];

/// ln Γ(x) by upward recurrence to y ≥ 60 and the Stirling series through B₃₀.
pub fn ln_gamma(x: f64) -> Result<f64, OracleError> {
    if !(x > 0.0) {
        return Err(OracleError::Domain(format!("ln_gamma at x = {x}")));
    }
    let mut y = hp(x);
    let mut product = int(1);
    let mut shift = x;
    while shift < 60.0 {
        product *= y.clone();
        y += int(1);
        shift += 1.0;
    }
    let half = int(1) / int(2);
    let two_pi = int(2) * pi();
    let mut s = (y.clone() - half.clone()) * y.clone().ln() - y.clone() + half * two_pi.ln();
    let y2 = y.clone() * y.clone();
    let mut ypow = y;
    for (k, &(num, den)) in BERNOULLI.iter().enumerate() {
        let k2 = 2 * (k as i64 + 1);
        s += int(num) / (int(den) * int(k2 * (k2 - 1)) * ypow.clone());
        ypow *= y2.clone();
    }
    Ok(to_f64(&(s - product.ln())))
}
