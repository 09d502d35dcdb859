//! Numerical oracles: finite-difference residuals of the traveling ODE, its
//! first integral and the PDE, the `℘` differential equation, adaptive
//! shooting, and the implicit hypergeometric relations.
//!
//! The finite-difference oracles never call the integrator and the shooting
//! oracle never differentiates numerically beyond reading off one initial
//! slope, so the two routes share nothing but the solution under test.

mod fd;
mod grid;
mod integrator;
mod oracles;
mod report;

pub use fd::derivatives;
pub use grid::{Grid, Grid2d, MIN_GRID_POINTS};
pub use integrator::Dopri5;
pub use oracles::{
    first_integral_residual, implicit_residual_check, ode_residual, pde_residual,
    shoot_and_compare, shoot_conservation, solution_grid, verify_solution, weierstrass_exclusions,
    weierstrass_ode_residual, Dynamics, Tolerances, FD_LEVELS, FD_STEP_FRACTION,
};
pub use report::VerificationReport;

use crate::error::Result;
use crate::reduction::{EquationParams, FamilyLabel};
use crate::solutions::Solution;

/// What the oracles need from a solution.
pub trait Profile {
    fn params(&self) -> EquationParams;
    fn is_psi_native(&self) -> bool;
    fn evaluate_h(&self, xi: f64) -> Result<f64>;
    fn evaluate_psi(&self, xi: f64) -> Result<f64>;

    fn distance_to_singularity(&self, _xi: f64) -> f64 {
        f64::INFINITY
    }

    fn length_scale(&self) -> f64 {
        1.0
    }

    /// Neighbourhoods to keep stencils out of, as `(center, radius)`.
    fn exclusions(&self, _lo: f64, _hi: f64) -> Vec<(f64, f64)> {
        Vec::new()
    }

    /// The quantity the ODE is checked in: `ψ` for native solutions, else `h`.
    fn primary(&self, xi: f64) -> Result<f64> {
        if self.is_psi_native() {
            self.evaluate_psi(xi)
        } else {
            self.evaluate_h(xi)
        }
    }
}

impl Profile for Solution {
    fn params(&self) -> EquationParams {
        EquationParams::for_family(self.family())
            .or_else(|| EquationParams::for_family(FamilyLabel::Liouville))
            .expect("catalogued family")
    }

    fn is_psi_native(&self) -> bool {
        Solution::is_psi_native(self)
    }

    fn evaluate_h(&self, xi: f64) -> Result<f64> {
        Solution::evaluate_h(self, xi)
    }

    fn evaluate_psi(&self, xi: f64) -> Result<f64> {
        Solution::evaluate_psi(self, xi)
    }

    fn distance_to_singularity(&self, xi: f64) -> f64 {
        Solution::distance_to_singularity(self, xi)
    }

    fn length_scale(&self) -> f64 {
        Solution::length_scale(self)
    }

    fn exclusions(&self, lo: f64, hi: f64) -> Vec<(f64, f64)> {
        self.singularities().exclusions(lo, hi)
    }
}
