//! Reduction of `ψ_uv = α e^{aψ} + β e^{bψ}` to a traveling-wave ODE, its
//! first integral, and the Weierstrass data of the cubic families.

mod elliptic;
mod ode;
mod params;

pub use elliptic::{classify_case, elliptic_data, lemniscatic_c1, CaseLabel, EllipticData, DEGENERATE_C1};
pub use ode::{first_integral, traveling_ode, OdeDescriptor, QuadratureDescriptor};
pub use params::{classify_family, EquationParams, FamilyLabel, FrameParams, SPECIAL_VALUE_TOL};
