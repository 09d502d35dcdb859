use serde::{Deserialize, Serialize};

use super::params::{EquationParams, FrameParams};
use crate::error::Result;

/// The traveling-wave ODE `h h″ − (h′)² = f(h)` with
/// `f(h) = (h²/λγ)(α h^a + β h^b)`.
///
/// Dividing by `h²` gives the equivalent form in `ψ = log h`,
/// `ψ″ = (α e^{aψ} + β e^{bψ})/λγ`, which is the natural one for the
/// sine- and sinh-Gordon families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OdeDescriptor {
    pub params: EquationParams,
    pub lambda_gamma: f64,
}

impl OdeDescriptor {
    pub fn f(&self, h: f64) -> Result<f64> {
        Ok(h * h * self.params.nonlinearity_h(h)? / self.lambda_gamma)
    }

    /// `h h″ − (h′)² − f(h)`.
    pub fn residual(&self, h: f64, dh: f64, d2h: f64) -> Result<f64> {
        Ok(h * d2h - dh * dh - self.f(h)?)
    }

    /// `ψ″` as prescribed by the ODE.
    pub fn psi_second_derivative(&self, psi: f64) -> f64 {
        self.params.nonlinearity(psi) / self.lambda_gamma
    }

    /// `ψ″ − (α e^{aψ} + β e^{bψ})/λγ`.
    pub fn psi_residual(&self, psi: f64, d2psi: f64) -> f64 {
        d2psi - self.psi_second_derivative(psi)
    }

    /// `h″ = ((h′)² + f(h))/h`, the explicit second-order form.
    pub fn h_second_derivative(&self, h: f64, dh: f64) -> Result<f64> {
        Ok((dh * dh + self.f(h)?) / h)
    }
}

/// Builds the ODE descriptor for a parameter set and frame.
pub fn traveling_ode(params: &EquationParams, frame: &FrameParams) -> Result<OdeDescriptor> {
    params.validate()?;
    Ok(OdeDescriptor {
        params: *params,
        lambda_gamma: frame.lambda_gamma(),
    })
}

/// The first integral `(h′)² = (2/λγ) h² G(h)` with
/// `G(h) = c₁ + (α/a) h^a + (β/b) h^b`.
///
/// When `β = 0` the second term is absent (the single-exponential branch).
/// The `ψ` form reads `(ψ′)² = (2/λγ) G(e^ψ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureDescriptor {
    pub params: EquationParams,
    pub lambda_gamma: f64,
    pub c1: f64,
}

impl QuadratureDescriptor {
    pub fn g(&self, h: f64) -> Result<f64> {
        Ok(self.c1 + self.params.potential_h(h)?)
    }

    pub fn g_psi(&self, psi: f64) -> f64 {
        self.c1 + self.params.potential(psi)
    }

    /// `(2/λγ) h² G(h)`, the prescribed value of `(h′)²`.
    pub fn dh_squared(&self, h: f64) -> Result<f64> {
        Ok(2.0 / self.lambda_gamma * h * h * self.g(h)?)
    }

    pub fn dpsi_squared(&self, psi: f64) -> f64 {
        2.0 / self.lambda_gamma * self.g_psi(psi)
    }

    /// `(h′)² − (2/λγ) h² G(h)`.
    pub fn residual(&self, h: f64, dh: f64) -> Result<f64> {
        Ok(dh * dh - self.dh_squared(h)?)
    }

    pub fn psi_residual(&self, psi: f64, dpsi: f64) -> f64 {
        dpsi * dpsi - self.dpsi_squared(psi)
    }

    /// `h″` from differentiating the first integral; regular through `h = 0`.
    pub fn h_second_derivative(&self, h: f64) -> Result<f64> {
        Ok((2.0 * self.c1 * h + self.params.quadrature_force(h)?) / self.lambda_gamma)
    }

    pub fn ode(&self) -> OdeDescriptor {
        OdeDescriptor {
            params: self.params,
            lambda_gamma: self.lambda_gamma,
        }
    }
}

pub fn first_integral(
    params: &EquationParams,
    frame: &FrameParams,
    c1: f64,
) -> Result<QuadratureDescriptor> {
    params.validate()?;
    Ok(QuadratureDescriptor {
        params: *params,
        lambda_gamma: frame.lambda_gamma(),
        c1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::FamilyLabel;

    fn frame(lg: f64) -> FrameParams {
        FrameParams::from_lambda_gamma(lg, 0.0).unwrap()
    }

    fn family(f: FamilyLabel) -> EquationParams {
        EquationParams::for_family(f).unwrap()
    }

    #[test]
    fn ode_right_hand_sides() {
        let ode = traveling_ode(&family(FamilyLabel::Liouville), &frame(1.0)).unwrap();
        assert_eq!(ode.f(2.0).unwrap(), 8.0);
        let ode = traveling_ode(&family(FamilyLabel::Tzitzeica), &frame(1.0)).unwrap();
        assert_eq!(ode.f(1.0).unwrap(), 0.0);
        let ode = traveling_ode(&family(FamilyLabel::SinhGordon), &frame(2.0)).unwrap();
        assert_eq!(ode.f(1.0).unwrap(), 0.0);
    }

    #[test]
    fn first_integral_values() {
        let q = first_integral(&family(FamilyLabel::Tzitzeica), &frame(1.0), 0.0).unwrap();
        assert_eq!(q.g(1.0).unwrap(), 1.5);
        let q = first_integral(&family(FamilyLabel::Liouville), &frame(1.0), -1.0).unwrap();
        assert_eq!(q.g(1.0).unwrap(), 0.0);
        // sine-Gordon turning point: c₁ − cos ψ vanishes at ψ = 0 for c₁ = 1
        let q = first_integral(&family(FamilyLabel::SineGordon), &frame(1.0), 1.0).unwrap();
        assert_eq!(q.g_psi(0.0), 0.0);
    }

    #[test]
    fn non_integer_exponent_needs_positive_h() {
        let p = EquationParams::new(1.0, 1.0, 0.5, -1.0).unwrap();
        let q = first_integral(&p, &frame(1.0), 1.0).unwrap();
        assert!(q.g(-1.0).is_err());
        assert!(q.g(0.0).is_err());
        assert!(q.g(4.0).is_ok());
    }

    #[test]
    fn quadrature_acceleration_matches_ode() {
        for fam in [FamilyLabel::Tzitzeica, FamilyLabel::Liouville, FamilyLabel::SinhGordon] {
            let q = first_integral(&family(fam), &frame(0.7), 0.4).unwrap();
            let h = 0.8;
            let dh = q.dh_squared(h).unwrap().sqrt();
            let a = q.h_second_derivative(h).unwrap();
            let b = q.ode().h_second_derivative(h, dh).unwrap();
            assert!((a - b).abs() < 1e-13, "{fam:?}");
        }
        let q = first_integral(&family(FamilyLabel::Tzitzeica), &frame(1.0), -1.5).unwrap();
        assert_eq!(q.h_second_derivative(0.0).unwrap(), 0.0);
    }

    #[test]
    fn sinh_gordon_first_integral_is_cosh() {
        let q = first_integral(&family(FamilyLabel::SinhGordon), &frame(1.0), 0.3).unwrap();
        for &psi in &[-1.0f64, 0.0, 0.7] {
            let expected = 0.3 + 0.5 * (2.0 * psi).cosh();
            assert!((q.g_psi(psi) - expected).abs() < 1e-14);
        }
    }
}
