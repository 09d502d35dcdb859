use serde::{Deserialize, Serialize};

/// Residual statistics for one oracle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub oracle: String,
    pub max_residual: f64,
    pub rms_residual: f64,
    pub points_used: usize,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// Reduces residuals in order; any NaN makes the maximum infinite.
    pub fn from_residuals(oracle: impl Into<String>, residuals: &[f64], tolerance: f64) -> Self {
        let mut max = 0.0f64;
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for &r in residuals {
            let a = if r.is_nan() { f64::INFINITY } else { r.abs() };
            max = max.max(a);
            // Kahan summation of squares
            let y = a * a - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        let n = residuals.len();
        let rms = if n == 0 { 0.0 } else { (sum / n as f64).sqrt() };
        VerificationReport {
            oracle: oracle.into(),
            max_residual: max,
            rms_residual: rms,
            points_used: n,
            tolerance,
            pass: n > 0 && max <= tolerance,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.pass = self.points_used > 0 && self.max_residual <= tolerance;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        let r = VerificationReport::from_residuals("x", &[3.0, -4.0], 5.0);
        assert_eq!(r.max_residual, 4.0);
        assert!((r.rms_residual - (12.5f64).sqrt()).abs() < 1e-15);
        assert!(r.pass);
        assert!(!r.clone().with_tolerance(3.9).pass);
        let r = VerificationReport::from_residuals("x", &[f64::NAN], 1.0);
        assert!(!r.pass);
    }
}
