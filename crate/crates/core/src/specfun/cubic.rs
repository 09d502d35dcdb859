//! Roots of the Weierstrass cubic `4t³ − g₂t − g₃`.

use serde::{Deserialize, Serialize};

/// Relative tolerance on `Δ = g₂³ − 27g₃²` below which the cubic is treated
/// as having a repeated root.
pub const DEGENERATE_DELTA_TOL: f64 = 1e-12;

/// Roots of `4t³ − g₂t − g₃`, which always sum to zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CubicRoots {
    /// Three real roots sorted descending, `e1 ≥ e2 ≥ e3`.
    ThreeReal { e1: f64, e2: f64, e3: f64 },
    /// One real root and the complex pair `re ± i·im` with `im > 0`.
    OneReal { real: f64, re: f64, im: f64 },
}

impl CubicRoots {
    pub fn real_roots(&self) -> Vec<f64> {
        match *self {
            CubicRoots::ThreeReal { e1, e2, e3 } => vec![e1, e2, e3],
            CubicRoots::OneReal { real, .. } => vec![real],
        }
    }
}

pub fn discriminant(g2: f64, g3: f64) -> f64 {
    g2 * g2 * g2 - 27.0 * g3 * g3
}

/// Scaled test `|Δ| ≤ tol · max(|g₂|³, 27g₃²)`.
pub fn is_degenerate(g2: f64, g3: f64) -> bool {
    let delta = discriminant(g2, g3);
    let scale = (g2.abs().powi(3)).max(27.0 * g3 * g3);
    delta.abs() <= DEGENERATE_DELTA_TOL * scale
}

/// Roots of `4t³ − g₂t − g₃`.
///
/// Repeated roots are returned exactly when the invariants are degenerate;
/// otherwise Viète's trigonometric form handles `Δ > 0` and Cardano's formula
/// the single real root of `Δ < 0`. Real roots get one Newton polish.
pub fn weierstrass_roots(g2: f64, g3: f64) -> CubicRoots {
    if g2 == 0.0 && g3 == 0.0 {
        return CubicRoots::ThreeReal {
            e1: 0.0,
            e2: 0.0,
            e3: 0.0,
        };
    }
    if is_degenerate(g2, g3) {
        let c = (g2 / 12.0).max(0.0).sqrt();
        return if g3 < 0.0 {
            CubicRoots::ThreeReal {
                e1: c,
                e2: c,
                e3: -2.0 * c,
            }
        } else {
            CubicRoots::ThreeReal {
                e1: 2.0 * c,
                e2: -c,
                e3: -c,
            }
        };
    }
    let delta = discriminant(g2, g3);
    if delta > 0.0 {
        // t³ + pt + q with p = −g₂/4 < 0, q = −g₃/4
        let amp = 2.0 * (g2 / 12.0).sqrt();
        let arg = (3.0 * 3f64.sqrt() * g3 / g2.powf(1.5)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        let mut r = [
            amp * theta.cos(),
            amp * (theta - tau).cos(),
            amp * (theta - 2.0 * tau).cos(),
        ];
        for x in r.iter_mut() {
            *x = polish(*x, g2, g3);
        }
        r.sort_by(|a, b| b.total_cmp(a));
        CubicRoots::ThreeReal {
            e1: r[0],
            e2: r[1],
            e3: r[2],
        }
    } else {
        let p = -g2 / 4.0;
        let q = -g3 / 4.0;
        let disc = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
        let u = (-q / 2.0 + disc).cbrt();
        let v = (-q / 2.0 - disc).cbrt();
        let real = polish(u + v, g2, g3);
        let im = (0.75 * real * real + p).max(0.0).sqrt();
        CubicRoots::OneReal {
            real,
            re: -0.5 * real,
            im,
        }
    }
}

fn polish(t: f64, g2: f64, g3: f64) -> f64 {
    let f = 4.0 * t * t * t - g2 * t - g3;
    let df = 12.0 * t * t - g2;
    if df.abs() > f64::EPSILON * (g2.abs() + 1.0) {
        t - f / df
    } else {
        t
    }
}
