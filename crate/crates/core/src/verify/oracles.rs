use serde::{Deserialize, Serialize};

use super::fd::derivatives;
use super::grid::{Grid, Grid2d};
use super::integrator::Dopri5;
use super::report::VerificationReport;
use super::Profile;
use crate::error::{Error, Result};
use crate::reduction::{
    first_integral, traveling_ode, FrameParams, OdeDescriptor, QuadratureDescriptor,
    SPECIAL_VALUE_TOL,
};
use crate::solutions::{ImplicitRelation, Singularities, Solution};
use crate::specfun::{WeierstrassInvariants, WeierstrassP};

/// Difference step as a fraction of the length scale and of the distance
/// to the nearest singularity.
pub const FD_STEP_FRACTION: f64 = 0.02;
/// Richardson extrapolation levels applied to the central differences.
pub const FD_LEVELS: usize = 2;

/// Pass thresholds of the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub ode: f64,
    pub first_integral: f64,
    pub weierstrass: f64,
    pub shooting: f64,
    pub pde: f64,
    pub implicit: f64,
    pub conservation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            ode: 1e-8,
            first_integral: 1e-8,
            weierstrass: 1e-10,
            shooting: 1e-6,
            pde: 1e-6,
            implicit: 1e-8,
            conservation: 1e-8,
        }
    }
}

fn fd_step<P: Profile + ?Sized>(sol: &P, xi: f64) -> f64 {
    FD_STEP_FRACTION * sol.length_scale().min(sol.distance_to_singularity(xi))
}

fn primary_derivatives<P: Profile + ?Sized>(sol: &P, xi: f64) -> Result<(f64, f64, f64)> {
    derivatives(|x| sol.primary(x), xi, fd_step(sol, xi), FD_LEVELS)
}

/// Residual of the traveling ODE, `ψ″ − N(ψ)/λγ` for native solutions and
/// `h h″ − (h′)² − f(h)` otherwise, each relative to `max(1, |rhs|)`.
pub fn ode_residual<P: Profile + ?Sized>(
    sol: &P,
    frame: &FrameParams,
    grid: &Grid,
) -> Result<VerificationReport> {
    let ode = traveling_ode(&sol.params(), frame)?;
    let mut res = Vec::with_capacity(grid.n);
    for xi in grid.points()? {
        let (v, d1, d2) = primary_derivatives(sol, xi)?;
        let r = if sol.is_psi_native() {
            let rhs = ode.psi_second_derivative(v);
            (d2 - rhs) / rhs.abs().max(1.0)
        } else {
            let f = ode.f(v)?;
            (v * d2 - d1 * d1 - f) / f.abs().max(1.0)
        };
        res.push(r);
    }
    Ok(VerificationReport::from_residuals(
        "ode_residual",
        &res,
        Tolerances::default().ode,
    ))
}

/// Residual of the first integral, `(ψ′)² − (2/λγ)G(e^ψ)` or
/// `(h′)² − (2/λγ)h²G(h)`, relative to `max(1, |rhs|)`.
pub fn first_integral_residual<P: Profile + ?Sized>(
    sol: &P,
    frame: &FrameParams,
    c1: f64,
    grid: &Grid,
) -> Result<VerificationReport> {
    let q = first_integral(&sol.params(), frame, c1)?;
    let mut res = Vec::with_capacity(grid.n);
    for xi in grid.points()? {
        let (v, d1, _) = primary_derivatives(sol, xi)?;
        let rhs = if sol.is_psi_native() {
            q.dpsi_squared(v)
        } else {
            q.dh_squared(v)?
        };
        res.push((d1 * d1 - rhs) / rhs.abs().max(1.0));
    }
    Ok(VerificationReport::from_residuals(
        "first_integral_residual",
        &res,
        Tolerances::default().first_integral,
    ))
}

/// Exclusions around the real pole lattice of `℘`.
pub fn weierstrass_exclusions(inv: WeierstrassInvariants, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let s = match WeierstrassP::new(inv).real_period() {
        Some(period) => Singularities::Lattice { origin: 0.0, period },
        None => Singularities::Points { points: vec![0.0] },
    };
    s.exclusions(lo, hi)
}

/// `|℘′² − (4℘³ − g₂℘ − g₃)| / max(1, |℘|³)`.
pub fn weierstrass_ode_residual(
    inv: WeierstrassInvariants,
    grid: &Grid,
) -> Result<VerificationReport> {
    let wp = WeierstrassP::new(inv);
    let mut res = Vec::with_capacity(grid.n);
    for z in grid.points()? {
        let (p, dp) = wp.eval(z)?;
        let rhs = 4.0 * p * p * p - inv.g2 * p - inv.g3;
        res.push((dp * dp - rhs) / p.abs().powi(3).max(1.0));
    }
    Ok(VerificationReport::from_residuals(
        "weierstrass_ode_residual",
        &res,
        Tolerances::default().weierstrass,
    ))
}

/// Dynamics for the shooting oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dynamics {
    Ode(OdeDescriptor),
    Quadrature(QuadratureDescriptor),
}

impl From<OdeDescriptor> for Dynamics {
    fn from(d: OdeDescriptor) -> Self {
        Dynamics::Ode(d)
    }
}

impl From<QuadratureDescriptor> for Dynamics {
    fn from(d: QuadratureDescriptor) -> Self {
        Dynamics::Quadrature(d)
    }
}

impl Dynamics {
    fn psi_acceleration(&self, psi: f64) -> f64 {
        match self {
            Dynamics::Ode(d) => d.psi_second_derivative(psi),
            Dynamics::Quadrature(q) => q.ode().psi_second_derivative(psi),
        }
    }

    fn h_acceleration(&self, h: f64, dh: f64) -> Result<f64> {
        match self {
            Dynamics::Ode(d) => d.h_second_derivative(h, dh),
            Dynamics::Quadrature(q) => q.h_second_derivative(h),
        }
    }
}

/// Integrates the second-order ODE from the closed form's state at
/// `xi_start` over `span` (signed) and reports the largest deviation from
/// the closed form at the accepted steps.
///
/// With an [`OdeDescriptor`] the `h` equation is `h″ = ((h′)² + f(h))/h`,
/// which cannot cross `h = 0`; a [`QuadratureDescriptor`] supplies the
/// regular form obtained by differentiating the first integral.
pub fn shoot_and_compare<P: Profile + ?Sized>(
    desc: impl Into<Dynamics>,
    sol: &P,
    xi_start: f64,
    span: f64,
) -> Result<VerificationReport> {
    let dynamics = desc.into();
    let (v0, d0, _) = primary_derivatives(sol, xi_start)?;
    let native = sol.is_psi_native();
    let rhs = |_: f64, y: &[f64; 2]| -> Result<[f64; 2]> {
        let acc = if native {
            dynamics.psi_acceleration(y[0])
        } else {
            dynamics.h_acceleration(y[0], y[1])?
        };
        Ok([y[1], acc])
    };
    let mut res = Vec::new();
    Dopri5::default().integrate(rhs, xi_start, [v0, d0], xi_start + span, |x, y| {
        res.push(y[0] - sol.primary(x)?);
        Ok(())
    })?;
    Ok(VerificationReport::from_residuals(
        "shoot_and_compare",
        &res,
        Tolerances::default().shooting,
    ))
}

/// Shoots the `h` equation from `h0` with the slope the first integral
/// prescribes (sign from `slope_sign`) and reports the drift of
/// `λγ (h′)²/(2h²) − (α/a)h^a − (β/b)h^b` away from `c₁`.
pub fn shoot_conservation(
    desc: &QuadratureDescriptor,
    h0: f64,
    slope_sign: f64,
    xi_start: f64,
    span: f64,
) -> Result<VerificationReport> {
    let sq = desc.dh_squared(h0)?;
    if sq < 0.0 {
        return Err(Error::domain(
            "shoot_conservation",
            format!("no real slope at h = {h0}"),
        ));
    }
    let ode = desc.ode();
    let invariant = |h: f64, dh: f64| -> Result<f64> {
        Ok(desc.lambda_gamma * dh * dh / (2.0 * h * h) - desc.params.potential_h(h)?)
    };
    let scale = desc.c1.abs().max(1.0);
    let mut res = Vec::new();
    Dopri5::default().integrate(
        |_, y: &[f64; 2]| Ok([y[1], ode.h_second_derivative(y[0], y[1])?]),
        xi_start,
        [h0, slope_sign.signum() * sq.sqrt()],
        xi_start + span,
        |_, y| {
            res.push((invariant(y[0], y[1])? - desc.c1) / scale);
            Ok(())
        },
    )?;
    Ok(VerificationReport::from_residuals(
        "shoot_conservation",
        &res,
        Tolerances::default().conservation,
    ))
}

/// Residual of the PDE `ψ_tt − ψ_zz = (α e^{aψ} + β e^{bψ})/λ` at the points
/// of a `(z, t)` rectangle, through `ξ = kz − ωt`. Solutions not native in
/// `ψ` are checked in the equivalent `h` form
/// `h(h_tt − h_zz) − (h_t² − h_z²) = h²(α h^a + β h^b)/λ`, which stays
/// regular where `h` crosses zero. Points whose `ξ` falls inside an
/// exclusion are skipped.
pub fn pde_residual(
    sol: &Solution,
    frame: &FrameParams,
    grid: &Grid2d,
) -> Result<VerificationReport> {
    let params = sol.params();
    let (k, w, lambda) = (frame.k, frame.omega, frame.lambda);
    let corners = [
        frame.xi(grid.z_min, grid.t_min),
        frame.xi(grid.z_min, grid.t_max),
        frame.xi(grid.z_max, grid.t_min),
        frame.xi(grid.z_max, grid.t_max),
    ];
    let lo = corners.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = corners.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let excl = Profile::exclusions(sol, lo, hi);
    let mut res = Vec::with_capacity(grid.nz * grid.nt);
    for (z, t) in grid.points() {
        let xi = frame.xi(z, t);
        if excl.iter().any(|&(c, r)| (xi - c).abs() <= r) {
            continue;
        }
        let d = fd_step(sol, xi);
        let dz = if k != 0.0 { d / k.abs() } else { d };
        let dt = if w != 0.0 { d / w.abs() } else { d };
        let residual = |use_psi: bool| -> Result<f64> {
            let field = |zz: f64, tt: f64| -> Result<f64> {
                let x = frame.xi(zz, tt);
                if use_psi {
                    sol.evaluate_psi(x)
                } else {
                    sol.evaluate_h(x)
                }
            };
            let (v, vz, vzz) = derivatives(|zz| field(zz, t), z, dz, FD_LEVELS)?;
            let (_, vt, vtt) = derivatives(|tt| field(z, tt), t, dt, FD_LEVELS)?;
            Ok(if use_psi {
                let rhs = params.nonlinearity(v) / lambda;
                (vtt - vzz - rhs) / rhs.abs().max(1.0)
            } else {
                let rhs = v * v * params.nonlinearity_h(v)? / lambda;
                (v * (vtt - vzz) - (vt * vt - vz * vz) - rhs) / rhs.abs().max(1.0)
            })
        };
        let r = residual(sol.is_psi_native())?;
        res.push(r);
    }
    Ok(VerificationReport::from_residuals(
        "pde_residual",
        &res,
        Tolerances::default().pde,
    ))
}

/// Checks an implicit `c₁ = 0` relation along a solution. The sign and the
/// alignment `ξ*` are fitted at the first grid point; the grid must lie on
/// one monotone stretch of `h`.
pub fn implicit_residual_check(
    rel: &ImplicitRelation,
    sol: &Solution,
    grid: &Grid,
) -> Result<VerificationReport> {
    if rel.family != sol.family() {
        return Err(Error::InvalidParams(format!(
            "relation for {} applied to a {} solution",
            rel.family.slug(),
            sol.family().slug()
        )));
    }
    if sol.c1().abs() > SPECIAL_VALUE_TOL {
        return Err(Error::InvalidParams(
            "implicit relations hold for c1 = 0 only".into(),
        ));
    }
    let pts = grid.points()?;
    let first = pts[0];
    let (h0, dh0, _) = derivatives(|x| sol.evaluate_h(x), first, fd_step(sol, first), FD_LEVELS)?;
    let sign = if dh0 >= 0.0 { 1.0 } else { -1.0 };
    let xi_star = rel.align(first, h0, sign)?;
    let mut res = Vec::with_capacity(pts.len());
    for xi in pts {
        let h = sol.evaluate_h(xi)?;
        res.push(rel.lhs(h)? - rel.rhs(xi, sign, xi_star));
    }
    Ok(VerificationReport::from_residuals(
        "implicit_residual_check",
        &res,
        Tolerances::default().implicit,
    ))
}

/// Grid over `[lo, hi]` with the solution's singular neighbourhoods removed.
pub fn solution_grid(sol: &Solution, lo: f64, hi: f64, n: usize) -> Result<Grid> {
    Ok(Grid::new(lo, hi, n)?.with_exclusions(sol.singularities().exclusions(lo, hi)))
}

/// Runs the ODE, first-integral, shooting and PDE oracles on one solution.
pub fn verify_solution(
    sol: &Solution,
    frame: &FrameParams,
    lo: f64,
    hi: f64,
    n: usize,
) -> Result<Vec<VerificationReport>> {
    let grid = solution_grid(sol, lo, hi, n)?;
    let mut out = vec![
        ode_residual(sol, frame, &grid)?,
        first_integral_residual(sol, frame, sol.c1(), &grid)?,
    ];
    let pts = grid.points()?;
    let start = pts[0];
    let room = sol.distance_to_singularity(start) * 0.9;
    let span = (5.0 * sol.length_scale()).min(room).min(hi - start);
    if span > 0.0 {
        let q = first_integral(&sol.params(), frame, sol.c1())?;
        out.push(shoot_and_compare(q, sol, start, span)?);
    }
    if frame.omega != 0.0 {
        let (t_a, t_b) = ((frame.k * 0.0 - hi) / frame.omega, (frame.k * 0.0 - lo) / frame.omega);
        let gz = Grid2d::new((-0.5, 0.5), (t_a.min(t_b), t_a.max(t_b)), 40)?;
        out.push(pde_residual(sol, frame, &gz)?);
    }
    Ok(out)
}
