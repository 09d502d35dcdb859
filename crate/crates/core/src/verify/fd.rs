use crate::error::Result;

/// Value, first and second derivative at `x` from central differences at
/// steps `δ, δ/2, …`, Richardson-extrapolated `levels` times.
pub fn derivatives<F>(f: F, x: f64, delta: f64, levels: usize) -> Result<(f64, f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let f0 = f(x)?;
    let mut d1 = Vec::with_capacity(levels + 1);
    let mut d2 = Vec::with_capacity(levels + 1);
    let mut step = delta;
    for _ in 0..=levels {
        let (p, m) = (f(x + step)?, f(x - step)?);
        d1.push((p - m) / (2.0 * step));
        d2.push((p - 2.0 * f0 + m) / (step * step));
        step *= 0.5;
    }
    Ok((f0, richardson(d1), richardson(d2)))
}

/// Neville-style elimination of the even error terms.
fn richardson(mut t: Vec<f64>) -> f64 {
    let mut factor = 4.0;
    while t.len() > 1 {
        for i in 0..t.len() - 1 {
            t[i] = (factor * t[i + 1] - t[i]) / (factor - 1.0);
        }
        t.pop();
        factor *= 4.0;
    }
    t[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_derivatives() {
        let (v, d1, d2) = derivatives(|x: f64| Ok(x.sin()), 0.7, 0.05, 2).unwrap();
        assert_eq!(v, 0.7f64.sin());
        assert!((d1 - 0.7f64.cos()).abs() < 1e-12);
        assert!((d2 + 0.7f64.sin()).abs() < 1e-10);
    }

    #[test]
    fn extrapolation_order() {
        let err = |levels, delta| {
            let (_, _, d2) = derivatives(|x: f64| Ok(x.exp()), 0.0, delta, levels).unwrap();
            (d2 - 1.0).abs()
        };
        assert!(err(1, 0.2) / err(1, 0.1) > 12.0);
        assert!(err(0, 0.2) / err(0, 0.1) > 3.5);
    }
}
