use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reduction::{classify_family, EquationParams, FamilyLabel, FrameParams};
use crate::specfun::gauss_2f1;

/// Which hypergeometric integral appears on the left-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ImplicitKind {
    /// `h ₂F₁(½, ⅓; 4/3; −2h³) = ∫₀^h du/√(1 + 2u³)`.
    Cubic,
    /// `h ₂F₁(½, ¼; 5/4; −h⁴) = ∫₀^h du/√(1 + u⁴)`.
    Quartic,
    /// `h^{−b} √(s·P(h)) ₂F₁(1, 1 − a/(2(a−b)); 1 − b/(2(a−b)); −(bα/(aβ)) h^{a−b})`
    /// with `P = (α/a)h^a + (β/b)h^b` and `s = sgn(λγ)`.
    TwoExponential,
}

/// Implicit `c₁ = 0` relation `lhs(h) = ±(ξ − ξ*)·slope`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImplicitRelation {
    pub family: FamilyLabel,
    pub kind: ImplicitKind,
    /// Signed; the fitted sign absorbs the `∓`.
    pub slope: f64,
    pub params: EquationParams,
    /// `sgn(λγ)`, used only by [`ImplicitKind::TwoExponential`].
    #[serde(default = "one")]
    pub orientation: f64,
}

fn one() -> f64 {
    1.0
}

impl ImplicitRelation {
    pub fn lhs(&self, h: f64) -> Result<f64> {
        match self.kind {
            ImplicitKind::Cubic => Ok(h * gauss_2f1(0.5, 1.0 / 3.0, 4.0 / 3.0, -2.0 * h * h * h)?),
            ImplicitKind::Quartic => Ok(h * gauss_2f1(0.5, 0.25, 1.25, -h.powi(4))?),
            ImplicitKind::TwoExponential => {
                let EquationParams { alpha, beta, a, b, .. } = self.params;
                let radicand = self.orientation * self.params.potential_h(h)?;
                if radicand < 0.0 {
                    return Err(Error::domain(
                        "implicit_relation",
                        format!("no real branch at h = {h}"),
                    ));
                }
                let d = 2.0 * (a - b);
                let x = -(b * alpha) / (a * beta) * h.powf(a - b);
                let f = gauss_2f1(1.0, 1.0 - a / d, 1.0 - b / d, x)?;
                Ok(h.powf(-b) * radicand.sqrt() * f)
            }
        }
    }

    pub fn rhs(&self, xi: f64, sign: f64, xi_star: f64) -> f64 {
        sign * (xi - xi_star) * self.slope
    }

    /// The `ξ*` that makes the relation exact at `(xi, h)` on the given sign.
    pub fn align(&self, xi: f64, h: f64, sign: f64) -> Result<f64> {
        Ok(xi - sign * self.lhs(h)? / self.slope)
    }
}

/// The implicit relation for Tzitzeica, Dodd–Bullough or sinh-Gordon.
pub fn implicit_relation(family: FamilyLabel, frame: &FrameParams) -> Result<ImplicitRelation> {
    let lg = frame.lambda_gamma();
    let (kind, slope_sq) = match family {
        FamilyLabel::Tzitzeica => (ImplicitKind::Cubic, 1.0 / lg),
        FamilyLabel::DoddBullough => (ImplicitKind::Cubic, -1.0 / lg),
        FamilyLabel::SinhGordon => (ImplicitKind::Quartic, 1.0 / (2.0 * lg)),
        other => return Err(Error::UnsupportedFamily(other)),
    };
    if slope_sq <= 0.0 {
        return Err(Error::SignDomain(format!(
            "implicit relation for {} needs the opposite sign of lambda*gamma = {lg}",
            family.slug()
        )));
    }
    Ok(ImplicitRelation {
        family,
        kind,
        slope: slope_sq.sqrt(),
        params: EquationParams::for_family(family).expect("catalogued family"),
        orientation: 1.0,
    })
}

/// The `c₁ = 0` relation for arbitrary real coefficients, valid where
/// `h > 0` and `sgn(λγ)·P(h) > 0`.
pub fn implicit_relation_general(
    params: &EquationParams,
    frame: &FrameParams,
) -> Result<ImplicitRelation> {
    params.validate()?;
    if params.imaginary {
        return Err(Error::UnsupportedFamily(FamilyLabel::SineGordon));
    }
    if params.beta == 0.0 || params.a == params.b {
        return Err(Error::UnsupportedFamily(classify_family(params)?));
    }
    let lg = frame.lambda_gamma();
    Ok(ImplicitRelation {
        family: classify_family(params)?,
        kind: ImplicitKind::TwoExponential,
        slope: -lg.signum() * params.beta / (2.0 * lg.abs()).sqrt(),
        params: *params,
        orientation: lg.signum(),
    })
}
