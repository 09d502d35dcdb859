use serde::{Deserialize, Serialize};

use super::params::{FamilyLabel, FrameParams, SPECIAL_VALUE_TOL};
use crate::error::{Error, Result};
use crate::specfun::{discriminant, is_degenerate, weierstrass_roots, CubicRoots};

/// `c₁` at which the Tzitzeica cubic has `g₃ = 0`.
pub fn lemniscatic_c1() -> f64 {
    -3.0 / 4f64.cbrt()
}

/// `c₁` at which the Tzitzeica cubic degenerates.
pub const DEGENERATE_C1: f64 = -1.5;

/// Cubic `(h′)² = a₃h³ + a₂h² + a₁h + a₀` and its Weierstrass invariants.
///
/// The substitution `h = (4℘ − a₂/3)/a₃` turns the cubic into
/// `(℘′)² = 4℘³ − g₂℘ − g₃`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipticData {
    pub family: FamilyLabel,
    pub c1: f64,
    pub r: f64,
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    /// `2c₁r`
    pub p: f64,
    pub g2: f64,
    pub g3: f64,
    pub delta: f64,
    pub roots: CubicRoots,
}

impl EllipticData {
    pub fn is_degenerate(&self) -> bool {
        is_degenerate(self.g2, self.g3)
    }

    /// `h` from `℘` through the cubic substitution.
    pub fn h_from_p(&self, p: f64) -> f64 {
        (4.0 * p - self.a2 / 3.0) / self.a3
    }

    /// Value of the cubic at `h`.
    pub fn cubic(&self, h: f64) -> f64 {
        ((self.a3 * h + self.a2) * h + self.a1) * h + self.a0
    }
}

/// Cubic coefficients and invariants for a family reducible to `℘`.
pub fn elliptic_data(family: FamilyLabel, c1: f64, frame: &FrameParams) -> Result<EllipticData> {
    if !c1.is_finite() {
        return Err(Error::InvalidParams("c1 must be finite".into()));
    }
    let r = frame.r;
    let p = 2.0 * c1 * r;
    let (a3, a0) = match family {
        FamilyLabel::Liouville => (2.0 * r, 0.0),
        FamilyLabel::Tzitzeica => (2.0 * r, r),
        FamilyLabel::DoddBullough => (-2.0 * r, -r),
        FamilyLabel::TzitzeicaDoddBullough => (2.0 * r, -r),
        FamilyLabel::DoddBulloughMikhailov => (-2.0 * r, r),
        other => return Err(Error::UnsupportedFamily(other)),
    };
    let (a2, a1) = (p, 0.0);
    let g2 = (a2 * a2 - 3.0 * a1 * a3) / 12.0;
    let g3 = (9.0 * a1 * a2 * a3 - 27.0 * a0 * a3 * a3 - 2.0 * a2 * a2 * a2) / 432.0;
    Ok(EllipticData {
        family,
        c1,
        r,
        a0,
        a1,
        a2,
        a3,
        p,
        g2,
        g3,
        delta: discriminant(g2, g3),
        roots: weierstrass_roots(g2, g3),
    })
}

/// Solution regimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    /// Liouville, `c₁/λγ > 0`.
    LiouvilleSoliton,
    /// Liouville, `c₁/λγ < 0`.
    LiouvillePeriodic,
    /// Liouville, `c₁ = 0`.
    LiouvilleRational,
    /// `Δ = 0`, `g₃ < 0`: hyperbolic profiles.
    Degenerate1a,
    /// `Δ = 0`, `g₃ > 0`: trigonometric profiles.
    Degenerate1b,
    /// `g₂ = 0`.
    Equianharmonic,
    /// `g₃ = 0`.
    Lemniscatic,
    GeneralWeierstrass,
    /// Gordon families at the upper separatrix constant.
    KinkC1Plus,
    /// Gordon families at the lower separatrix constant.
    KinkC1Minus,
    AmplitudeC1Zero,
    AmplitudeGeneric,
}

impl CaseLabel {
    pub fn slug(self) -> &'static str {
        match self {
            CaseLabel::LiouvilleSoliton => "liouville-soliton",
            CaseLabel::LiouvillePeriodic => "liouville-periodic",
            CaseLabel::LiouvilleRational => "liouville-rational",
            CaseLabel::Degenerate1a => "degenerate-1a",
            CaseLabel::Degenerate1b => "degenerate-1b",
            CaseLabel::Equianharmonic => "equianharmonic",
            CaseLabel::Lemniscatic => "lemniscatic",
            CaseLabel::GeneralWeierstrass => "general-weierstrass",
            CaseLabel::KinkC1Plus => "kink-c1-plus",
            CaseLabel::KinkC1Minus => "kink-c1-minus",
            CaseLabel::AmplitudeC1Zero => "amplitude-c1-zero",
            CaseLabel::AmplitudeGeneric => "amplitude-generic",
        }
    }

    pub const ALL: [CaseLabel; 12] = [
        CaseLabel::LiouvilleSoliton,
        CaseLabel::LiouvillePeriodic,
        CaseLabel::LiouvilleRational,
        CaseLabel::Degenerate1a,
        CaseLabel::Degenerate1b,
        CaseLabel::Equianharmonic,
        CaseLabel::Lemniscatic,
        CaseLabel::GeneralWeierstrass,
        CaseLabel::KinkC1Plus,
        CaseLabel::KinkC1Minus,
        CaseLabel::AmplitudeC1Zero,
        CaseLabel::AmplitudeGeneric,
    ];

    pub fn from_slug(s: &str) -> Option<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        CaseLabel::ALL
            .iter()
            .copied()
            .find(|c| c.slug() == norm || format!("{c:?}").to_ascii_lowercase() == norm.replace('-', ""))
    }

    /// Validity predicate: the label is admissible for `(family, c₁, λγ)`.
    pub fn holds(self, family: FamilyLabel, c1: f64, lambda_gamma: f64) -> bool {
        FrameParams::from_lambda_gamma(lambda_gamma, 0.0)
            .and_then(|f| classify_case(family, c1, &f))
            .map(|c| c == self)
            .unwrap_or(false)
    }
}

fn near(x: f64, target: f64) -> bool {
    (x - target).abs() <= SPECIAL_VALUE_TOL
}

/// `c₁` expressed in Tzitzeica terms: the Dodd–Bullough cubic equals the
/// Tzitzeica one with `c₁ ↦ −c₁`, `r ↦ −r`.
fn tzitzeica_equivalent_c1(family: FamilyLabel, c1: f64) -> f64 {
    match family {
        FamilyLabel::DoddBullough | FamilyLabel::TzitzeicaDoddBullough => -c1,
        _ => c1,
    }
}

/// Selects the solution regime for `(family, c₁)` in a frame.
///
/// Cubic families are classified through the invariants of
/// [`elliptic_data`]; special constants are matched with an absolute
/// tolerance of `1e-12`.
pub fn classify_case(family: FamilyLabel, c1: f64, frame: &FrameParams) -> Result<CaseLabel> {
    if !c1.is_finite() {
        return Err(Error::InvalidParams("c1 must be finite".into()));
    }
    let case = match family {
        FamilyLabel::Liouville => {
            if near(c1, 0.0) {
                CaseLabel::LiouvilleRational
            } else if c1 * frame.lambda_gamma() > 0.0 {
                CaseLabel::LiouvilleSoliton
            } else {
                CaseLabel::LiouvillePeriodic
            }
        }
        FamilyLabel::Tzitzeica
        | FamilyLabel::DoddBullough
        | FamilyLabel::TzitzeicaDoddBullough
        | FamilyLabel::DoddBulloughMikhailov => {
            let data = elliptic_data(family, c1, frame)?;
            let tc1 = tzitzeica_equivalent_c1(family, c1);
            if near(tc1, DEGENERATE_C1) || data.is_degenerate() {
                if data.g3 < 0.0 {
                    CaseLabel::Degenerate1a
                } else {
                    CaseLabel::Degenerate1b
                }
            } else if near(tc1, 0.0) {
                CaseLabel::Equianharmonic
            } else if near(tc1, lemniscatic_c1()) {
                CaseLabel::Lemniscatic
            } else {
                CaseLabel::GeneralWeierstrass
            }
        }
        FamilyLabel::SineGordon | FamilyLabel::SinhGordon => {
            let sep = if family == FamilyLabel::SineGordon { 1.0 } else { 0.5 };
            if near(c1, sep) {
                CaseLabel::KinkC1Plus
            } else if near(c1, -sep) {
                CaseLabel::KinkC1Minus
            } else if near(c1, 0.0) {
                CaseLabel::AmplitudeC1Zero
            } else {
                CaseLabel::AmplitudeGeneric
            }
        }
        FamilyLabel::GenericTwoExponential => return Err(Error::UnsupportedFamily(family)),
    };
    Ok(case)
}
