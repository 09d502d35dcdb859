use thiserror::Error;

use crate::reduction::{CaseLabel, FamilyLabel};

/// Every failure the library can report.
///
/// The variants are grouped so that callers (the CLI in particular) can map
/// them onto exit codes: parameter problems versus domain/singularity problems.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("point {z} lies within {radius:e} of a pole (distance {distance:e})")]
    PoleProximity { z: f64, distance: f64, radius: f64 },

    #[error("solution is singular at xi = {xi}")]
    Singular { xi: f64 },

    #[error("psi = log h is unavailable at xi = {xi} (h = {h})")]
    PsiUnavailable { xi: f64, h: f64 },

    #[error("invalid equation parameters: {0}")]
    InvalidParams(String),

    #[error("degenerate traveling frame: {0}")]
    FrameDegenerate(String),

    #[error("family {0:?} is not supported by this operation")]
    UnsupportedFamily(FamilyLabel),

    #[error("case mismatch: requested {requested:?}, parameters give {actual:?}")]
    CaseMismatch {
        requested: CaseLabel,
        actual: CaseLabel,
    },

    #[error("sign-domain error: {0}")]
    SignDomain(String),

    #[error("grid has no points left after exclusions")]
    EmptyGrid,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("integrator step size underflow at xi = {xi}")]
    StepUnderflow { xi: f64 },
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }

    /// True for failures caused by evaluating outside a function's domain or
    /// on top of a singularity, as opposed to malformed configuration.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. }
                | Error::PoleProximity { .. }
                | Error::Singular { .. }
                | Error::PsiUnavailable { .. }
                | Error::SignDomain(_)
                | Error::StepUnderflow { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
