//! Traveling-wave solutions of two-exponential nonlinear wave equations
//! `ψ_uv = α e^{aψ} + β e^{bψ}`: reduction, closed-form profiles and
//! numerical verification.

pub mod anchors;
pub mod error;
pub mod reduction;
pub mod specfun;

pub use error::{Error, Result};
pub use reduction::{
    classify_case, classify_family, elliptic_data, first_integral, traveling_ode, CaseLabel,
    EllipticData, EquationParams, FamilyLabel, FrameParams, OdeDescriptor, QuadratureDescriptor,
};
pub mod solutions;
pub use solutions::{
    construct, dodd_bullough, implicit_relation, implicit_relation_general, liouville, sine_gordon, sinh_gordon, tdb_dbm,
    tzitzeica, Branch, ImplicitRelation, Singularities, Solution, SolutionDescriptor,
};
pub mod verify;
pub use verify::{Grid, Grid2d, Profile, VerificationReport};
