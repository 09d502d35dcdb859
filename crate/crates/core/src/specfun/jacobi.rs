//! Jacobi elliptic functions and the amplitude, parameter convention.
//!
//! For `m ≤ 1` the amplitude comes from the descending Landen (AGM) phase
//! recursion, which yields the continuous unwrapped branch directly;
//! `sn`, `cn`, `dn` follow from it. For `m > 1` the reciprocal-parameter
//! transformation maps back onto `1/m < 1`.

use super::ellint::ellint_k;

const MAX_AGM_STEPS: usize = 64;

/// Values of `sn`, `cn` and `dn` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// Jacobi amplitude `am(u; m)`.
///
/// For `m < 1` the result is the continuous branch, growing without bound
/// with `u` (it advances by `π` every `2K(m)`). For `m = 1` it is the
/// Gudermannian. For `m > 1` the amplitude is bounded and periodic with
/// `|am| ≤ asin(1/√m)`.
pub fn jacobi_am(u: f64, m: f64) -> f64 {
    if u == 0.0 {
        return 0.0;
    }
    if m == 0.0 {
        return u;
    }
    if m == 1.0 {
        return u.sinh().atan();
    }
    if m > 1.0 {
        let t = jacobi_sn_cn_dn(u, m);
        return t.sn.atan2(t.cn);
    }
    agm_amplitude(u, m)
}

/// `(sn, cn, dn)` at `(u, m)` for any finite real `u` and `m`.
pub fn jacobi_sn_cn_dn(u: f64, m: f64) -> JacobiTriple {
    if m > 1.0 {
        // sn(u; m) = sn(u√m; 1/m)/√m, cn(u; m) = dn(u√m; 1/m), dn(u; m) = cn(u√m; 1/m)
        let sm = m.sqrt();
        let inner = jacobi_sn_cn_dn(u * sm, 1.0 / m);
        return JacobiTriple {
            sn: inner.sn / sm,
            cn: inner.dn,
            dn: inner.cn,
        };
    }
    if m == 1.0 {
        let sech = 1.0 / u.cosh();
        return JacobiTriple {
            sn: u.tanh(),
            cn: sech,
            dn: sech,
        };
    }
    let phi = jacobi_am(u, m);
    let (sn, cn) = phi.sin_cos();
    let dn = (1.0 - m * sn * sn).sqrt();
    JacobiTriple { sn, cn, dn }
}

/// Descending Landen phase recursion, valid for every `m < 1` including
/// negative parameters (then `√(1 − m) > 1` and the `c_n` are negative).
fn agm_amplitude(u: f64, m: f64) -> f64 {
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    let mut ratios = [0.0f64; MAX_AGM_STEPS];
    let mut n = 0;
    while n < MAX_AGM_STEPS {
        let an = 0.5 * (a + b);
        let cn = 0.5 * (a - b);
        b = (a * b).sqrt();
        a = an;
        ratios[n] = cn / an;
        n += 1;
        if cn.abs() <= f64::EPSILON * an {
            break;
        }
    }
    let mut phi = (n as f64).exp2() * a * u;
    for ratio in ratios[..n].iter().rev() {
        phi = 0.5 * (phi + (ratio * phi.sin()).asin());
    }
    phi
}

/// Quarter period `K(m)` where it is finite (`m < 1`).
pub(crate) fn quarter_period(m: f64) -> Option<f64> {
    ellint_k(m).ok()
}
