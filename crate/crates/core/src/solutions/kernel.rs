//! Closed-form profiles in the local variable `x = ξ − ξ₀`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{jacobi_am, jacobi_sn_cn_dn, WeierstrassP};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Kernel {
    /// `base + amp·sech²(kx)`, or `csch²` when `singular`.
    Hyperbolic { base: f64, amp: f64, k: f64, singular: bool },
    /// `base + amp·sec²(kx)`, or `csc²` when `singular`.
    Trigonometric { base: f64, amp: f64, k: f64, singular: bool },
    /// `amp/x²`.
    InverseSquare { amp: f64 },
    /// `scale·℘(x) + shift`.
    Weierstrass { wp: WeierstrassP, scale: f64, shift: f64 },
    /// `base + amp·cn²(kx; m)`.
    Cnoidal { base: f64, amp: f64, k: f64, m: f64 },
    /// `ψ = shift + 4 atan(exp(sign·κx))`.
    KinkArctan { kappa: f64, shift: f64, sign: f64 },
    /// `ψ = 2 am(sign·κx; m)`.
    Amplitude { kappa: f64, m: f64, sign: f64 },
    /// `ψ = 2 artanh(exp(sign·κx))`, real only where `sign·κx < 0`.
    SinhArctanhExp { kappa: f64, sign: f64 },
    /// `ψ = asinh(tan(sign·κx))`.
    SinhTan { kappa: f64, sign: f64 },
    /// `ψ = sign·asinh(sc(κx; m))`.
    SinhAsinhSc { kappa: f64, m: f64, sign: f64 },
    /// `ψ = sign·asinh(b·ns(κx; m))`.
    SinhAsinhNs { kappa: f64, m: f64, b: f64, sign: f64 },
}

impl Kernel {
    pub(crate) fn psi_native(&self) -> bool {
        matches!(
            self,
            Kernel::KinkArctan { .. }
                | Kernel::Amplitude { .. }
                | Kernel::SinhArctanhExp { .. }
                | Kernel::SinhTan { .. }
                | Kernel::SinhAsinhSc { .. }
                | Kernel::SinhAsinhNs { .. }
        )
    }

    /// Value at `x`: `h` for the `h` kernels, `ψ` for the native ones.
    pub(crate) fn eval(&self, x: f64) -> Result<f64> {
        let v = match *self {
            Kernel::Hyperbolic { base, amp, k, singular } => {
                let y = k * x;
                let d = if singular { y.sinh() } else { y.cosh() };
                base + amp / (d * d)
            }
            Kernel::Trigonometric { base, amp, k, singular } => {
                let y = k * x;
                let d = if singular { y.sin() } else { y.cos() };
                base + amp / (d * d)
            }
            Kernel::InverseSquare { amp } => amp / (x * x),
            Kernel::Weierstrass { wp, scale, shift } => scale * wp.eval(x)?.0 + shift,
            Kernel::Cnoidal { base, amp, k, m } => {
                let cn = jacobi_sn_cn_dn(k * x, m).cn;
                base + amp * cn * cn
            }
            Kernel::KinkArctan { kappa, shift, sign } => {
                shift + 4.0 * (sign * kappa * x).exp().atan()
            }
            Kernel::Amplitude { kappa, m, sign } => 2.0 * jacobi_am(sign * kappa * x, m),
            Kernel::SinhArctanhExp { kappa, sign } => {
                let t = (sign * kappa * x).exp();
                if t >= 1.0 {
                    return Err(Error::domain(
                        "sinh_gordon",
                        format!("arctanh argument {t} is not below 1"),
                    ));
                }
                2.0 * t.atanh()
            }
            Kernel::SinhTan { kappa, sign } => (sign * kappa * x).tan().asinh(),
            Kernel::SinhAsinhSc { kappa, m, sign } => {
                let t = jacobi_sn_cn_dn(kappa * x, m);
                sign * (t.sn / t.cn).asinh()
            }
            Kernel::SinhAsinhNs { kappa, m, b, sign } => {
                let t = jacobi_sn_cn_dn(kappa * x, m);
                sign * (b / t.sn).asinh()
            }
        };
        Ok(v)
    }

    /// Named constants, for descriptors.
    pub(crate) fn constants(&self) -> BTreeMap<String, f64> {
        let mut c = BTreeMap::new();
        let mut put = |k: &str, v: f64| {
            c.insert(k.to_string(), v);
        };
        match *self {
            Kernel::Hyperbolic { base, amp, k, .. }
            | Kernel::Trigonometric { base, amp, k, .. } => {
                put("base", base);
                put("amplitude", amp);
                put("wavenumber", k);
            }
            Kernel::InverseSquare { amp } => put("amplitude", amp),
            Kernel::Weierstrass { wp, scale, shift } => {
                let inv = wp.invariants();
                put("g2", inv.g2);
                put("g3", inv.g3);
                put("delta", inv.delta);
                put("scale", scale);
                put("shift", shift);
                if let Some(p) = wp.real_period() {
                    put("period", p);
                }
            }
            Kernel::Cnoidal { base, amp, k, m } => {
                put("base", base);
                put("amplitude", amp);
                put("wavenumber", k);
                put("m", m);
            }
            Kernel::KinkArctan { kappa, shift, sign } => {
                put("kappa", kappa);
                put("shift", shift);
                put("sign", sign);
            }
            Kernel::Amplitude { kappa, m, sign }
            | Kernel::SinhAsinhSc { kappa, m, sign } => {
                put("kappa", kappa);
                put("m", m);
                put("sign", sign);
            }
            Kernel::SinhArctanhExp { kappa, sign } | Kernel::SinhTan { kappa, sign } => {
                put("kappa", kappa);
                put("sign", sign);
            }
            Kernel::SinhAsinhNs { kappa, m, b, sign } => {
                put("kappa", kappa);
                put("m", m);
                put("b", b);
                put("sign", sign);
            }
        }
        c
    }
}

/// Where a solution stops being finite or real.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Singularities {
    None,
    /// Isolated singular points.
    Points { points: Vec<f64> },
    /// `origin + n·period` for every integer `n`.
    Lattice { origin: f64, period: f64 },
    /// The solution is singular at `from` and not real beyond it.
    HalfLine { from: f64, toward_positive: bool },
}

/// Default exclusion around isolated points.
pub const ISOLATED_EXCLUSION: f64 = 0.05;
/// Default exclusion around lattice points, as a fraction of the period.
pub const LATTICE_EXCLUSION_FRACTION: f64 = 0.05;

const MAX_LATTICE_POINTS: f64 = 1e6;

impl Singularities {
    pub fn is_none(&self) -> bool {
        matches!(self, Singularities::None)
    }

    /// Distance from `xi` to the singular set; zero inside an excluded half-line.
    pub fn distance(&self, xi: f64) -> f64 {
        match self {
            Singularities::None => f64::INFINITY,
            Singularities::Points { points } => points
                .iter()
                .map(|p| (xi - p).abs())
                .fold(f64::INFINITY, f64::min),
            Singularities::Lattice { origin, period } => {
                let d = xi - origin;
                (d - period * (d / period).round()).abs()
            }
            Singularities::HalfLine { from, toward_positive } => {
                let beyond = if *toward_positive { xi >= *from } else { xi <= *from };
                if beyond {
                    0.0
                } else {
                    (xi - from).abs()
                }
            }
        }
    }

    /// Exclusion intervals `(center, radius)` meeting `[lo, hi]` with the default radii.
    pub fn exclusions(&self, lo: f64, hi: f64) -> Vec<(f64, f64)> {
        self.exclusions_with(lo, hi, ISOLATED_EXCLUSION, LATTICE_EXCLUSION_FRACTION)
    }

    pub fn exclusions_with(
        &self,
        lo: f64,
        hi: f64,
        isolated: f64,
        lattice_fraction: f64,
    ) -> Vec<(f64, f64)> {
        match self {
            Singularities::None => Vec::new(),
            Singularities::Points { points } => points
                .iter()
                .filter(|p| **p >= lo - isolated && **p <= hi + isolated)
                .map(|p| (*p, isolated))
                .collect(),
            Singularities::Lattice { origin, period } => {
                let r = lattice_fraction * period;
                let first = ((lo - r - origin) / period).ceil();
                let last = ((hi + r - origin) / period).floor();
                if last - first > MAX_LATTICE_POINTS {
                    return vec![(0.5 * (lo + hi), 0.5 * (hi - lo) + r)];
                }
                let mut out = Vec::new();
                let mut n = first;
                while n <= last {
                    out.push((origin + n * period, r));
                    n += 1.0;
                }
                out
            }
            Singularities::HalfLine { from, toward_positive } => {
                let (a, b) = if *toward_positive {
                    (from - isolated, hi.max(*from) + isolated)
                } else {
                    (lo.min(*from) - isolated, from + isolated)
                };
                vec![(0.5 * (a + b), 0.5 * (b - a))]
            }
        }
    }

    /// Image under `x ↦ ξ = ±(x + ξ₀)`.
    pub(crate) fn mapped(self, xi0: f64, reflect: bool) -> Self {
        let f = |x: f64| if reflect { -(x + xi0) } else { x + xi0 };
        match self {
            Singularities::None => Singularities::None,
            Singularities::Points { points } => Singularities::Points {
                points: points.into_iter().map(f).collect(),
            },
            Singularities::Lattice { origin, period } => Singularities::Lattice {
                origin: f(origin),
                period,
            },
            Singularities::HalfLine { from, toward_positive } => Singularities::HalfLine {
                from: f(from),
                toward_positive: toward_positive != reflect,
            },
        }
    }
}

impl Kernel {
    /// Singular set in the local variable.
    pub(crate) fn singularities(&self) -> Singularities {
        use crate::specfun::ellint_k;
        let point0 = || Singularities::Points { points: vec![0.0] };
        match *self {
            Kernel::Hyperbolic { singular, .. } => {
                if singular {
                    point0()
                } else {
                    Singularities::None
                }
            }
            Kernel::Trigonometric { k, singular, .. } => Singularities::Lattice {
                origin: if singular { 0.0 } else { 0.5 * PI / k },
                period: PI / k,
            },
            Kernel::InverseSquare { .. } => point0(),
            Kernel::Weierstrass { wp, .. } => match wp.real_period() {
                Some(period) => Singularities::Lattice { origin: 0.0, period },
                None => point0(),
            },
            Kernel::Cnoidal { .. } | Kernel::KinkArctan { .. } | Kernel::Amplitude { .. } => {
                Singularities::None
            }
            Kernel::SinhArctanhExp { sign, .. } => Singularities::HalfLine {
                from: 0.0,
                toward_positive: sign > 0.0,
            },
            Kernel::SinhTan { kappa, .. } => Singularities::Lattice {
                origin: 0.5 * PI / kappa,
                period: PI / kappa,
            },
            Kernel::SinhAsinhSc { kappa, m, .. } => match ellint_k(m) {
                Ok(k) if m < 1.0 => Singularities::Lattice {
                    origin: k / kappa,
                    period: 2.0 * k / kappa,
                },
                _ => Singularities::None,
            },
            Kernel::SinhAsinhNs { kappa, m, .. } => match ellint_k(m) {
                Ok(k) => Singularities::Lattice {
                    origin: 0.0,
                    period: 2.0 * k / kappa,
                },
                Err(_) => point0(),
            },
        }
    }

    /// Characteristic length of the profile.
    pub(crate) fn length_scale(&self) -> f64 {
        match *self {
            Kernel::Hyperbolic { k, .. }
            | Kernel::Trigonometric { k, .. }
            | Kernel::Cnoidal { k, .. } => 1.0 / k,
            Kernel::InverseSquare { .. } => 1.0,
            Kernel::Weierstrass { wp, .. } => {
                let inv = wp.invariants();
                1.0 / (inv.g2.abs().powf(0.25) + inv.g3.abs().powf(1.0 / 6.0))
            }
            Kernel::KinkArctan { kappa, .. }
            | Kernel::SinhArctanhExp { kappa, .. }
            | Kernel::SinhTan { kappa, .. } => 1.0 / kappa,
            Kernel::Amplitude { kappa, m, .. }
            | Kernel::SinhAsinhSc { kappa, m, .. }
            | Kernel::SinhAsinhNs { kappa, m, .. } => 1.0 / (kappa * m.abs().sqrt().max(1.0)),
        }
    }
}
