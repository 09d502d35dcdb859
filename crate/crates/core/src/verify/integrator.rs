//! Dormand–Prince 5(4) with a standard step-size controller.

use crate::error::{Error, Result};

const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
/// Fifth-order weights minus fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dopri5 {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for Dopri5 {
    fn default() -> Self {
        Dopri5 {
            rtol: 1e-10,
            atol: 1e-10,
            max_steps: 1_000_000,
        }
    }
}

impl Dopri5 {
    /// Integrates `y′ = f(x, y)` from `x0` to `x_end` (either direction),
    /// calling `on_step` after every accepted step. Returns the final state.
    pub fn integrate<const N: usize, F, S>(
        &self,
        f: F,
        x0: f64,
        y0: [f64; N],
        x_end: f64,
        mut on_step: S,
    ) -> Result<[f64; N]>
    where
        F: Fn(f64, &[f64; N]) -> Result<[f64; N]>,
        S: FnMut(f64, &[f64; N]) -> Result<()>,
    {
        let dir = (x_end - x0).signum();
        let span = (x_end - x0).abs();
        if span == 0.0 {
            return Ok(y0);
        }
        let mut x = x0;
        let mut y = y0;
        let mut h = span * 1e-3;
        let mut k = [[0.0; N]; 7];
        k[0] = f(x, &y)?;
        for _ in 0..self.max_steps {
            let remaining = (x_end - x) * dir;
            if remaining <= 0.0 {
                return Ok(y);
            }
            h = h.min(remaining);
            if h <= 1e-14 * x.abs().max(span) {
                return Err(Error::StepUnderflow { xi: x });
            }
            let hs = dir * h;
            for s in 1..7 {
                let mut ys = y;
                for (j, kj) in k.iter().enumerate().take(s) {
                    let a = A[s][j];
                    if a != 0.0 {
                        for i in 0..N {
                            ys[i] += hs * a * kj[i];
                        }
                    }
                }
                k[s] = match f(x + C[s] * hs, &ys) {
                    Ok(v) if v.iter().all(|c| c.is_finite()) => v,
                    _ => [f64::NAN; N],
                };
            }
            let mut y_new = y;
            for (j, kj) in k.iter().enumerate().take(6) {
                for i in 0..N {
                    y_new[i] += hs * A[6][j] * kj[i];
                }
            }
            let mut err = 0.0;
            for i in 0..N {
                let mut e = 0.0;
                for (j, kj) in k.iter().enumerate() {
                    e += E[j] * kj[i];
                }
                let sc = self.atol + self.rtol * y[i].abs().max(y_new[i].abs());
                err += (hs * e / sc).powi(2);
            }
            let err = (err / N as f64).sqrt();
            if err.is_finite() && err <= 1.0 {
                x += hs;
                if remaining - h <= 1e-15 * span {
                    x = x_end;
                }
                y = y_new;
                k[0] = k[6];
                if k[0].iter().any(|c| !c.is_finite()) {
                    k[0] = f(x, &y)?;
                }
                on_step(x, &y)?;
                let grow = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
                h *= grow;
            } else {
                let shrink = if err.is_finite() { (0.9 * err.powf(-0.2)).clamp(0.1, 0.9) } else { 0.1 };
                h *= shrink;
            }
        }
        Err(Error::StepUnderflow { xi: x })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator() {
        let mut steps = 0;
        let y = Dopri5::default()
            .integrate(
                |_, y: &[f64; 2]| Ok([y[1], -y[0]]),
                0.0,
                [0.0, 1.0],
                10.0,
                |_, _| {
                    steps += 1;
                    Ok(())
                },
            )
            .unwrap();
        assert!((y[0] - 10f64.sin()).abs() < 1e-8);
        assert!((y[1] - 10f64.cos()).abs() < 1e-8);
        assert!(steps > 10);
    }

    #[test]
    fn backwards_integration() {
        let y = Dopri5::default()
            .integrate(|_, y: &[f64; 1]| Ok([y[0]]), 1.0, [1.0], -1.0, |_, _| Ok(()))
            .unwrap();
        assert!((y[0] - (-2f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn blow_up_reports_underflow() {
        // y′ = y², y(0) = 1 blows up at x = 1
        let r = Dopri5::default().integrate(|_, y: &[f64; 1]| Ok([y[0] * y[0]]), 0.0, [1.0], 2.0, |_, _| Ok(()));
        assert!(matches!(r, Err(Error::StepUnderflow { .. })));
    }
}
