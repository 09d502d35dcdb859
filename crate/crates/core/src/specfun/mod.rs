//! Special-function kernels: Carlson `RF`, elliptic integrals of the first
//! kind, Jacobi elliptic functions and amplitude, Weierstrass `℘`, and the
//! Gauss hypergeometric function.
//!
//! Elliptic functions use the parameter convention `m = k²` everywhere.
//! All functions are pure and thread-safe.

mod carlson;
mod cubic;
mod ellint;
mod hypergeometric;
mod jacobi;
mod weierstrass;

pub use carlson::carlson_rf;
pub use cubic::{discriminant, is_degenerate, weierstrass_roots, CubicRoots, DEGENERATE_DELTA_TOL};
pub use ellint::{ellint_f, ellint_k};
pub use hypergeometric::gauss_2f1;
pub use jacobi::{jacobi_am, jacobi_sn_cn_dn, JacobiTriple};
pub use weierstrass::{weierstrass_p, WeierstrassInvariants, WeierstrassP, POLE_EXCLUSION_FRACTION};

/// An elliptic parameter `m` (the square of the modulus `k`).
///
/// Negative values, values in `[0, 1]` and values above one are all accepted;
/// the operations document how each range is handled.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct EllipticModulus(pub f64);

impl EllipticModulus {
    /// Converts a modulus `k` into the parameter `m = k²`.
    pub fn from_modulus(k: f64) -> Self {
        EllipticModulus(k * k)
    }

    pub fn parameter(self) -> f64 {
        self.0
    }

    /// `m > 1`, where the amplitude is bounded and periodic.
    pub fn is_superunitary(self) -> bool {
        self.0 > 1.0
    }
}
