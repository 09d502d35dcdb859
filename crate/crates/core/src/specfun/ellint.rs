use std::f64::consts::{FRAC_PI_2, PI};

use super::carlson::carlson_rf;
use crate::error::{Error, Result};

/// Complete elliptic integral of the first kind `K(m)` in the parameter
/// convention, defined for `m < 1`.
pub fn ellint_k(m: f64) -> Result<f64> {
    if !(m < 1.0) {
        return Err(Error::domain("ellint_k", format!("K(m) requires m < 1, got {m}")));
    }
    carlson_rf(0.0, 1.0 - m, 1.0)
}

/// Incomplete elliptic integral of the first kind
///
/// ```text
/// F(φ; m) = ∫₀^φ dθ / √(1 − m sin²θ)
/// ```
///
/// using the parameter convention throughout (the modulus `k` is `√m`).
///
/// * `m < 1`: any real `φ`, through `F(φ + nπ) = F(φ) + 2n K(m)`.
/// * `m = 1`: `|φ| < π/2` only; the integral diverges at the quarter period.
/// * `m > 1`: the integrand is real only up to `|φ| ≤ asin(1/√m)`; the value
///   comes from the reciprocal-parameter transformation
///   `F(φ; m) = F(β; 1/m) / √m` with `sin β = √m sin φ`.
pub fn ellint_f(phi: f64, m: f64) -> Result<f64> {
    if !phi.is_finite() || !m.is_finite() {
        return Err(Error::domain("ellint_f", "arguments must be finite"));
    }
    if phi == 0.0 {
        return Ok(0.0);
    }
    if m == 0.0 {
        return Ok(phi);
    }
    if m > 1.0 {
        let sm = m.sqrt();
        let limit = (1.0 / sm).asin();
        if phi.abs() > limit * (1.0 + 4.0 * f64::EPSILON) {
            return Err(Error::domain(
                "ellint_f",
                format!("|phi| = {} exceeds the real domain asin(1/sqrt(m)) = {limit} for m = {m}", phi.abs()),
            ));
        }
        let s = (sm * phi.sin()).clamp(-1.0, 1.0);
        return Ok(principal(s.asin(), 1.0 / m)? / sm);
    }
    if m == 1.0 {
        if phi.abs() >= FRAC_PI_2 {
            return Err(Error::domain(
                "ellint_f",
                "F(phi; 1) diverges for |phi| >= pi/2",
            ));
        }
        return principal(phi, 1.0);
    }
    let n = (phi / PI).round();
    let reduced = phi - n * PI;
    let base = principal(reduced, m)?;
    if n == 0.0 {
        Ok(base)
    } else {
        Ok(base + 2.0 * n * ellint_k(m)?)
    }
}

/// `F(φ; m)` for `|φ| ≤ π/2` and `m ≤ 1`.
fn principal(phi: f64, m: f64) -> Result<f64> {
    let s = phi.sin();
    let c = phi.cos();
    if s == 0.0 {
        return Ok(0.0);
    }
    let rf = carlson_rf(c * c, 1.0 - m * s * s, 1.0)?;
    Ok(s * rf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(ellint_f(0.0, 0.3).unwrap(), 0.0);
        assert!((ellint_f(FRAC_PI_2, 0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((ellint_k(0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn odd_in_phi() {
        for &m in &[-1.0, 0.5, 0.99, 2.0] {
            for &phi in &[0.1, 0.4, 0.7] {
                let a = ellint_f(phi, m).unwrap();
                let b = ellint_f(-phi, m).unwrap();
                assert_eq!(a, -b);
            }
        }
    }

    #[test]
    fn hyperbolic_limit() {
        // F(φ; 1) = artanh(sin φ)
        for &phi in &[0.2, 0.9, 1.4] {
            let v = ellint_f(phi, 1.0).unwrap();
            assert!((v - phi.sin().atanh()).abs() < 1e-14 * v.abs().max(1.0));
        }
    }

    #[test]
    fn quasi_periodic_extension() {
        let m = 0.6;
        let k = ellint_k(m).unwrap();
        let a = ellint_f(0.3, m).unwrap();
        let b = ellint_f(0.3 + 2.0 * PI, m).unwrap();
        assert!((b - a - 4.0 * k).abs() < 1e-13);
    }

    #[test]
    fn superunitary_domain() {
        assert!(ellint_f(1.0, 2.0).is_err());
        assert!(ellint_f(0.5, 2.0).is_ok());
        let edge = (1.0f64 / 2.0f64.sqrt()).asin();
        assert!(ellint_f(edge, 2.0).is_ok());
        assert!(ellint_k(1.0).is_err());
    }
}
