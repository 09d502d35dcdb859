//! Closed-form traveling-wave solutions as immutable evaluators.
//!
//! Every constructor takes `c₁` and a frame, selects the regime with
//! [`classify_case`], and returns a [`Solution`] that evaluates `h(ξ)` and
//! `ψ(ξ) = log h(ξ)` and knows its singular set.

mod constructors;
mod implicit;
mod kernel;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reduction::{CaseLabel, FamilyLabel, FrameParams};

pub use constructors::{
    construct, dodd_bullough, liouville, sine_gordon, sinh_gordon, tdb_dbm, tzitzeica,
};
pub use implicit::{implicit_relation, implicit_relation_general, ImplicitKind, ImplicitRelation};
pub use kernel::{Singularities, ISOLATED_EXCLUSION, LATTICE_EXCLUSION_FRACTION};

use kernel::Kernel;

/// Choice of sign wherever a family has two solutions.
///
/// For the degenerate Tzitzeica cases `Plus` selects the bounded principal
/// profile and `Minus` its singular companion. For a `∓` the `Plus` branch
/// takes the upper sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "+" | "plus" | "+1" | "1" => Ok(Branch::Plus),
            "-" | "minus" | "-1" => Ok(Branch::Minus),
            other => Err(Error::InvalidParams(format!("unknown branch '{other}'"))),
        }
    }
}

/// `h(ξ) = (negate ? −1 : 1)·K((reflect ? −ξ : ξ) − ξ₀)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SignMap {
    pub negate: bool,
    pub reflect: bool,
}

/// A constructed closed-form solution.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    family: FamilyLabel,
    case: CaseLabel,
    branch: Branch,
    c1: f64,
    lambda_gamma: f64,
    xi0: f64,
    kernel: Kernel,
    map: SignMap,
    singularities: Singularities,
    unbounded: bool,
}

/// Serializable description of a [`Solution`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDescriptor {
    pub family: FamilyLabel,
    pub case: CaseLabel,
    pub branch: Branch,
    pub c1: f64,
    pub lambda_gamma: f64,
    pub xi0: f64,
    pub sign_map: SignMap,
    pub psi_native: bool,
    pub unbounded: bool,
    pub constants: BTreeMap<String, f64>,
    pub singularities: Singularities,
}

impl Solution {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        family: FamilyLabel,
        case: CaseLabel,
        branch: Branch,
        c1: f64,
        frame: &FrameParams,
        kernel: Kernel,
        map: SignMap,
        unbounded: bool,
    ) -> Self {
        let singularities = kernel.singularities().mapped(frame.xi0, map.reflect);
        Solution {
            family,
            case,
            branch,
            c1,
            lambda_gamma: frame.lambda_gamma(),
            xi0: frame.xi0,
            kernel,
            map,
            singularities,
            unbounded,
        }
    }

    pub fn family(&self) -> FamilyLabel {
        self.family
    }

    pub fn case(&self) -> CaseLabel {
        self.case
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn lambda_gamma(&self) -> f64 {
        self.lambda_gamma
    }

    pub fn xi0(&self) -> f64 {
        self.xi0
    }

    pub fn sign_map(&self) -> SignMap {
        self.map
    }

    /// True when the solution is written natively in `ψ`.
    pub fn is_psi_native(&self) -> bool {
        self.kernel.psi_native()
    }

    /// True for amplitude solutions that grow without bound or blow up.
    pub fn is_unbounded(&self) -> bool {
        self.unbounded
    }

    pub fn singularities(&self) -> &Singularities {
        &self.singularities
    }

    pub fn distance_to_singularity(&self, xi: f64) -> f64 {
        self.singularities.distance(xi)
    }

    /// Characteristic length of the profile, used to size difference steps.
    pub fn length_scale(&self) -> f64 {
        self.kernel.length_scale()
    }

    fn local(&self, xi: f64) -> f64 {
        let xi = if self.map.reflect { -xi } else { xi };
        xi - self.xi0
    }

    fn raw(&self, xi: f64) -> Result<f64> {
        if !xi.is_finite() {
            return Err(Error::domain("evaluate", "xi must be finite"));
        }
        let v = self.kernel.eval(self.local(xi))?;
        if !v.is_finite() {
            return Err(Error::Singular { xi });
        }
        Ok(v)
    }

    pub fn evaluate_h(&self, xi: f64) -> Result<f64> {
        let v = self.raw(xi)?;
        if self.is_psi_native() {
            let h = v.exp();
            return if h.is_finite() { Ok(h) } else { Err(Error::Singular { xi }) };
        }
        Ok(if self.map.negate { -v } else { v })
    }

    /// `ψ = log h`; native for the Gordon families, unavailable where `h ≤ 0`.
    pub fn evaluate_psi(&self, xi: f64) -> Result<f64> {
        if self.is_psi_native() {
            return self.raw(xi);
        }
        let h = self.evaluate_h(xi)?;
        if h > 0.0 {
            Ok(h.ln())
        } else {
            Err(Error::PsiUnavailable { xi, h })
        }
    }

    pub fn constants(&self) -> BTreeMap<String, f64> {
        self.kernel.constants()
    }

    pub fn descriptor(&self) -> SolutionDescriptor {
        SolutionDescriptor {
            family: self.family,
            case: self.case,
            branch: self.branch,
            c1: self.c1,
            lambda_gamma: self.lambda_gamma,
            xi0: self.xi0,
            sign_map: self.map,
            psi_native: self.is_psi_native(),
            unbounded: self.unbounded,
            constants: self.constants(),
            singularities: self.singularities.clone(),
        }
    }

    /// Rebuilds a solution from its descriptor, checking the recorded case.
    pub fn from_descriptor(d: &SolutionDescriptor) -> Result<Self> {
        let frame = FrameParams::from_lambda_gamma(d.lambda_gamma, d.xi0)?;
        construct(d.family, d.c1, &frame, d.branch, Some(d.case))
    }
}

#[cfg(test)]
mod tests;
