use crate::error::{Error, Result};

/// Relative size of the estimated series tail at which summation stops.
const TAIL_TOL: f64 = 1e-16;
const MAX_TERMS: usize = 2_000_000;

/// Gauss hypergeometric function `₂F₁(a, b; c; x)` for real parameters and
/// real `x < 1`.
///
/// * `|x| ≤ ½`: direct power series.
/// * `−9 ≤ x < −½`: Pfaff transformation onto `x/(x − 1) ∈ (⅓, 0.9]`.
/// * `x < −9`: the `1/(1 − x)` connection formula when `b − a` is not an
///   integer, otherwise the Pfaff series.
/// * `½ < x < 1`: direct series, which converges (slowly) for real `x < 1`.
///
/// `c` must not be a non-positive integer.
pub fn gauss_2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    if ![a, b, c, x].iter().all(|v| v.is_finite()) {
        return Err(Error::domain("gauss_2f1", "arguments must be finite"));
    }
    if c <= 0.0 && c == c.round() {
        return Err(Error::domain(
            "gauss_2f1",
            format!("c = {c} is a non-positive integer"),
        ));
    }
    if x >= 1.0 {
        return Err(Error::domain(
            "gauss_2f1",
            format!("x = {x} lies outside the implemented region x < 1"),
        ));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x >= -0.5 {
        return series(a, b, c, x);
    }
    if x >= -9.0 || is_integer(b - a) {
        // Pfaff: F(a, b; c; x) = (1 − x)^(−a) F(a, c − b; c; x/(x − 1))
        let z = x / (x - 1.0);
        return Ok((1.0 - x).powf(-a) * series(a, c - b, c, z)?);
    }
    connection_inverse(a, b, c, x)
}

fn is_integer(v: f64) -> bool {
    (v - v.round()).abs() < 1e-14 * v.abs().max(1.0)
}

/// Power series about zero with a geometric tail bound.
fn series(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        term *= ratio;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        let rho = ratio.abs();
        if rho < 1.0 && n > 2 {
            let tail = term.abs() * rho / (1.0 - rho);
            if tail <= TAIL_TOL * sum.abs() {
                return Ok(sum);
            }
        }
    }
    Err(Error::domain(
        "gauss_2f1",
        format!("series did not converge at x = {x}"),
    ))
}

/// `x < −9`, `b − a` non-integer:
///
/// ```text
/// F(a,b;c;x) = Γ(c)Γ(b−a)/(Γ(b)Γ(c−a)) (1−x)^(−a) F(a, c−b; a−b+1; 1/(1−x))
///            + Γ(c)Γ(a−b)/(Γ(a)Γ(c−b)) (1−x)^(−b) F(b, c−a; b−a+1; 1/(1−x))
/// ```
fn connection_inverse(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let w = 1.0 / (1.0 - x);
    let first = gamma_ratio(&[c, b - a], &[b, c - a]) * (1.0 - x).powf(-a)
        * series(a, c - b, a - b + 1.0, w)?;
    let second = gamma_ratio(&[c, a - b], &[a, c - b]) * (1.0 - x).powf(-b)
        * series(b, c - a, b - a + 1.0, w)?;
    Ok(first + second)
}

/// `∏Γ(num) / ∏Γ(den)`, with `1/Γ` at poles taken as zero.
fn gamma_ratio(num: &[f64], den: &[f64]) -> f64 {
    let mut v = 1.0;
    for &d in den {
        if d <= 0.0 && d == d.round() {
            return 0.0;
        }
        v /= gamma(d);
    }
    for &n in num {
        v *= gamma(n);
    }
    v
}

/// Lanczos approximation (g = 7, nine terms) with reflection for `x < ½`.
pub(crate) fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    use std::f64::consts::PI;
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_term() {
        assert_eq!(gauss_2f1(0.3, 1.7, 2.2, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn logarithm_identity() {
        // ₂F₁(1, 1; 2; x) = −ln(1 − x)/x
        for &x in &[0.5, 0.25, -0.3, -0.75, -5.0, -40.0, 0.8] {
            let v = gauss_2f1(1.0, 1.0, 2.0, x).unwrap();
            let expected = -(1.0 - x).ln() / x;
            assert!((v - expected).abs() < 1e-12 * expected.abs(), "x = {x}");
        }
        let v = gauss_2f1(1.0, 1.0, 2.0, 0.5).unwrap();
        assert!((v - 2.0 * std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn arctangent_identity() {
        // ₂F₁(½, 1; 3/2; −t²) = atan(t)/t, exercises all three regions
        for &t in &[0.3, 0.9, 2.0, 3.5, 10.0, 100.0] {
            let v = gauss_2f1(0.5, 1.0, 1.5, -t * t).unwrap();
            let expected = t.atan() / t;
            assert!((v - expected).abs() < 1e-12 * expected, "t = {t}");
        }
    }

    #[test]
    fn polynomial_termination() {
        // ₂F₁(−2, b; c; x) = 1 − 2bx/c + b(b+1)x²/(c(c+1))
        let (b, c, x) = (1.5, 2.5, 0.4);
        let expected = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0));
        assert!((gauss_2f1(-2.0, b, c, x).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn gamma_values() {
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma(0.5) - std::f64::consts::PI.sqrt()).abs() < 1e-14);
        assert!((gamma(-0.5) + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn domain_errors() {
        assert!(gauss_2f1(1.0, 1.0, -2.0, 0.1).is_err());
        assert!(gauss_2f1(1.0, 1.0, 2.0, 1.0).is_err());
        assert!(gauss_2f1(1.0, 1.0, 2.0, 1.5).is_err());
    }
}
