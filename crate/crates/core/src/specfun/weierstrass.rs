//! Weierstrass `℘` on the real axis from real invariants `(g₂, g₃)`.
//!
//! Non-degenerate lattices reduce to Jacobi functions through the roots of
//! the cubic: for three real roots
//! `℘(z) = e₃ + (e₁ − e₃)/sn²(√(e₁ − e₃) z; (e₂ − e₃)/(e₁ − e₃))`, and for a
//! single real root `e₂` with `H = √(3e₂² − g₂/4)`,
//! `℘(z) = e₂ + H (1 + cn(2√H z; m))/(1 − cn(2√H z; m))`, `m = ½ − 3e₂/(4H)`.
//! Degenerate lattices (`Δ = 0`) use the hyperbolic, trigonometric or
//! rational closed forms.

use serde::{Deserialize, Serialize};

use super::cubic::{discriminant, is_degenerate, weierstrass_roots, CubicRoots};
use super::jacobi::{jacobi_sn_cn_dn, quarter_period};
use crate::error::{Error, Result};

/// Points closer than this fraction of the real period to a pole are refused.
pub const POLE_EXCLUSION_FRACTION: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeierstrassInvariants {
    pub g2: f64,
    pub g3: f64,
    pub delta: f64,
}

impl WeierstrassInvariants {
    pub fn new(g2: f64, g3: f64) -> Self {
        WeierstrassInvariants {
            g2,
            g3,
            delta: discriminant(g2, g3),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        is_degenerate(self.g2, self.g3)
    }

    pub fn roots(&self) -> CubicRoots {
        weierstrass_roots(self.g2, self.g3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Lattice {
    /// `g₂ = g₃ = 0`: `℘ = 1/z²`.
    Rational,
    /// `Δ = 0, g₃ < 0`: `℘ = c + 3c csch²(wz)`, `w = √(3c)`.
    Hyperbolic { c: f64, w: f64 },
    /// `Δ = 0, g₃ > 0`: `℘ = −c + 3c csc²(wz)`.
    Trigonometric { c: f64, w: f64 },
    ThreeReal {
        e3: f64,
        span: f64,
        scale: f64,
        m: f64,
    },
    OneReal {
        e2: f64,
        h: f64,
        scale: f64,
        m: f64,
    },
}

/// A `℘` evaluator bound to one set of invariants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeierstrassP {
    invariants: WeierstrassInvariants,
    lattice: Lattice,
    period: Option<f64>,
    pole_radius: f64,
}

impl WeierstrassP {
    pub fn new(inv: WeierstrassInvariants) -> Self {
        let (g2, g3) = (inv.g2, inv.g3);
        let lattice = if g2 == 0.0 && g3 == 0.0 {
            Lattice::Rational
        } else if is_degenerate(g2, g3) {
            let c = (g2 / 12.0).max(0.0).sqrt();
            let w = (3.0 * c).sqrt();
            if g3 < 0.0 {
                Lattice::Hyperbolic { c, w }
            } else {
                Lattice::Trigonometric { c, w }
            }
        } else {
            match weierstrass_roots(g2, g3) {
                CubicRoots::ThreeReal { e1, e2, e3 } => {
                    let span = e1 - e3;
                    Lattice::ThreeReal {
                        e3,
                        span,
                        scale: span.sqrt(),
                        m: ((e2 - e3) / span).clamp(0.0, 1.0),
                    }
                }
                CubicRoots::OneReal { real, .. } => {
                    let h = (3.0 * real * real - g2 / 4.0).sqrt();
                    Lattice::OneReal {
                        e2: real,
                        h,
                        scale: 2.0 * h.sqrt(),
                        m: (0.5 - 0.75 * real / h).clamp(0.0, 1.0),
                    }
                }
            }
        };
        let period = match lattice {
            Lattice::Rational | Lattice::Hyperbolic { .. } => None,
            Lattice::Trigonometric { w, .. } => Some(std::f64::consts::PI / w),
            Lattice::ThreeReal { scale, m, .. } => quarter_period(m).map(|k| 2.0 * k / scale),
            Lattice::OneReal { scale, m, .. } => quarter_period(m).map(|k| 4.0 * k / scale),
        };
        let pole_radius = match (lattice, period) {
            (_, Some(p)) => POLE_EXCLUSION_FRACTION * p,
            (Lattice::Hyperbolic { w, .. }, None) => {
                POLE_EXCLUSION_FRACTION * std::f64::consts::PI / w
            }
            _ => 0.0,
        };
        WeierstrassP {
            invariants: inv,
            lattice,
            period,
            pole_radius,
        }
    }

    pub fn invariants(&self) -> WeierstrassInvariants {
        self.invariants
    }

    /// Spacing of the real poles, `None` when there is only the pole at 0.
    pub fn real_period(&self) -> Option<f64> {
        self.period
    }

    pub fn pole_radius(&self) -> f64 {
        self.pole_radius
    }

    /// Reduces `z` into the period cell centred on the pole at the origin.
    fn reduce(&self, z: f64) -> f64 {
        match self.period {
            Some(p) => z - p * (z / p).round(),
            None => z,
        }
    }

    pub fn distance_to_pole(&self, z: f64) -> f64 {
        self.reduce(z).abs()
    }

    /// `(℘(z), ℘′(z))`.
    pub fn eval(&self, z: f64) -> Result<(f64, f64)> {
        if !z.is_finite() {
            return Err(Error::domain("weierstrass_p", "argument must be finite"));
        }
        let zr = self.reduce(z);
        let distance = zr.abs();
        if distance == 0.0 || distance < self.pole_radius {
            return Err(Error::PoleProximity {
                z,
                distance,
                radius: self.pole_radius,
            });
        }
        let value = match self.lattice {
            Lattice::Rational => {
                let inv = 1.0 / zr;
                (inv * inv, -2.0 * inv * inv * inv)
            }
            Lattice::Hyperbolic { c, w } => {
                let s = (w * zr).sinh();
                let ch = (w * zr).cosh();
                (c + 3.0 * c / (s * s), -6.0 * c * w * ch / (s * s * s))
            }
            Lattice::Trigonometric { c, w } => {
                let (s, co) = (w * zr).sin_cos();
                (-c + 3.0 * c / (s * s), -6.0 * c * w * co / (s * s * s))
            }
            Lattice::ThreeReal { e3, span, scale, m } => {
                let t = jacobi_sn_cn_dn(scale * zr, m);
                let s2 = t.sn * t.sn;
                (
                    e3 + span / s2,
                    -2.0 * span * scale * t.cn * t.dn / (s2 * t.sn),
                )
            }
            Lattice::OneReal { e2, h, scale, m } => {
                let t = jacobi_sn_cn_dn(scale * zr, m);
                let coef = 2.0 * scale * h;
                if t.cn >= 0.0 {
                    let up = 1.0 + t.cn;
                    let s2 = t.sn * t.sn;
                    (
                        e2 + h * up * up / s2,
                        -coef * t.dn * up * up / (s2 * t.sn),
                    )
                } else {
                    let down = 1.0 - t.cn;
                    (
                        e2 + h * (1.0 + t.cn) / down,
                        -coef * t.sn * t.dn / (down * down),
                    )
                }
            }
        };
        Ok(value)
    }
}

/// `(℘(z; g₂, g₃), ℘′(z; g₂, g₃))` for real `z` away from the pole lattice.
pub fn weierstrass_p(z: f64, inv: WeierstrassInvariants) -> Result<(f64, f64)> {
    WeierstrassP::new(inv).eval(z)
}

/// The three-real-root Jacobi reduction applied to arbitrary ordered roots,
/// without the degenerate shortcut. Used to check continuity into `Δ = 0`.
#[cfg(test)]
pub(crate) fn p_from_real_roots(z: f64, e1: f64, e2: f64, e3: f64) -> f64 {
    let span = e1 - e3;
    let t = jacobi_sn_cn_dn(span.sqrt() * z, (e2 - e3) / span);
    e3 + span / (t.sn * t.sn)
}
