use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used when matching user-supplied constants against the
/// special values that select a case.
pub const SPECIAL_VALUE_TOL: f64 = 1e-12;

/// Coefficients of `ψ_uv = α e^{aψ} + β e^{bψ}`.
///
/// With `imaginary = true` the stored numbers are real multipliers of the
/// imaginary unit: the equation uses `α = alpha/i`, `β = beta/i`, `a = i·a`,
/// `b = i·b`. Only the conjugate-symmetric combination (`beta = −alpha`,
/// `b = −a`) keeps the right-hand side real, which is the sine-Gordon case;
/// no complex arithmetic is ever performed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquationParams {
    pub alpha: f64,
    pub beta: f64,
    pub a: f64,
    pub b: f64,
    #[serde(default)]
    pub imaginary: bool,
}

impl EquationParams {
    pub fn new(alpha: f64, beta: f64, a: f64, b: f64) -> Result<Self> {
        let p = EquationParams {
            alpha,
            beta,
            a,
            b,
            imaginary: false,
        };
        p.validate()?;
        Ok(p)
    }

    /// The canonical tuple for a catalogued family.
    pub fn for_family(family: FamilyLabel) -> Option<Self> {
        let (alpha, beta, a, b, imaginary) = match family {
            FamilyLabel::Liouville => (1.0, 0.0, 1.0, 0.0, false),
            FamilyLabel::Tzitzeica => (1.0, -1.0, 1.0, -2.0, false),
            FamilyLabel::DoddBullough => (-1.0, 1.0, 1.0, -2.0, false),
            FamilyLabel::TzitzeicaDoddBullough => (1.0, 1.0, 1.0, -2.0, false),
            FamilyLabel::DoddBulloughMikhailov => (-1.0, -1.0, 1.0, -2.0, false),
            FamilyLabel::SineGordon => (0.5, -0.5, 1.0, -1.0, true),
            FamilyLabel::SinhGordon => (0.5, -0.5, 2.0, -2.0, false),
            FamilyLabel::GenericTwoExponential => return None,
        };
        Some(EquationParams {
            alpha,
            beta,
            a,
            b,
            imaginary,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.alpha, self.beta, self.a, self.b];
        if !all.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParams("coefficients must be finite".into()));
        }
        if self.alpha == 0.0 && self.beta == 0.0 {
            return Err(Error::InvalidParams("alpha and beta are both zero".into()));
        }
        if self.a == 0.0 {
            return Err(Error::InvalidParams("exponent a must be nonzero".into()));
        }
        if self.beta != 0.0 && self.b == 0.0 {
            return Err(Error::InvalidParams(
                "exponent b must be nonzero when beta is nonzero".into(),
            ));
        }
        if self.imaginary && !(self.beta == -self.alpha && self.b == -self.a) {
            return Err(Error::InvalidParams(
                "imaginary exponents are supported only in the conjugate-symmetric form".into(),
            ));
        }
        Ok(())
    }

    /// `α e^{aψ} + β e^{bψ}` as a real number.
    pub fn nonlinearity(&self, psi: f64) -> f64 {
        if self.imaginary {
            self.alpha * (self.a * psi).sin() + self.beta * (self.b * psi).sin()
        } else {
            let second = if self.beta == 0.0 {
                0.0
            } else {
                self.beta * (self.b * psi).exp()
            };
            self.alpha * (self.a * psi).exp() + second
        }
    }

    /// `(α/a) e^{aψ} + (β/b) e^{bψ}`, the non-constant part of the first integral.
    pub fn potential(&self, psi: f64) -> f64 {
        if self.imaginary {
            -(self.alpha / self.a) * (self.a * psi).cos() - (self.beta / self.b) * (self.b * psi).cos()
        } else {
            let second = if self.beta == 0.0 {
                0.0
            } else {
                (self.beta / self.b) * (self.b * psi).exp()
            };
            (self.alpha / self.a) * (self.a * psi).exp() + second
        }
    }

    /// `α h^a + β h^b` in the logarithmic variable. Integer exponents allow
    /// negative `h`; otherwise `h` must be positive.
    pub fn nonlinearity_h(&self, h: f64) -> Result<f64> {
        if self.imaginary {
            return positive(h, "nonlinearity_h").map(|h| self.nonlinearity(h.ln()));
        }
        let second = if self.beta == 0.0 {
            0.0
        } else {
            self.beta * power(h, self.b)?
        };
        Ok(self.alpha * power(h, self.a)? + second)
    }

    /// `(α/a) h^a + (β/b) h^b`.
    pub fn potential_h(&self, h: f64) -> Result<f64> {
        if self.imaginary {
            return positive(h, "potential_h").map(|h| self.potential(h.ln()));
        }
        let second = if self.beta == 0.0 {
            0.0
        } else {
            (self.beta / self.b) * power(h, self.b)?
        };
        Ok((self.alpha / self.a) * power(h, self.a)? + second)
    }
    /// `Σ α(1 + 2/a) h^{a+1}`, so that `h″ = (2c₁h + force(h))/λγ` along the
    /// first integral. Terms with `a = −2` vanish identically, which keeps the
    /// expression regular where `h` crosses zero.
    pub fn quadrature_force(&self, h: f64) -> Result<f64> {
        if self.imaginary {
            let h = positive(h, "quadrature_force")?;
            let psi = h.ln();
            return Ok(h * self.nonlinearity(psi) + 2.0 * h * self.potential(psi));
        }
        let term = |coef: f64, exponent: f64| -> Result<f64> {
            let k = coef * (1.0 + 2.0 / exponent);
            if k == 0.0 {
                Ok(0.0)
            } else {
                Ok(k * power(h, exponent + 1.0)?)
            }
        };
        let second = if self.beta == 0.0 { 0.0 } else { term(self.beta, self.b)? };
        Ok(term(self.alpha, self.a)? + second)
    }
}

fn positive(h: f64, function: &'static str) -> Result<f64> {
    if h > 0.0 {
        Ok(h)
    } else {
        Err(Error::domain(function, format!("h = {h} must be positive")))
    }
}

fn power(h: f64, exponent: f64) -> Result<f64> {
    if exponent == exponent.round() && exponent.abs() < 64.0 {
        if h == 0.0 && exponent < 0.0 {
            return Err(Error::domain("power", "h = 0 with a negative exponent"));
        }
        Ok(h.powi(exponent as i32))
    } else if h > 0.0 {
        Ok(h.powf(exponent))
    } else {
        Err(Error::domain(
            "power",
            format!("h = {h} with non-integer exponent {exponent}"),
        ))
    }
}

/// Traveling-frame data.
///
/// The characteristics are `z = u − λv`, `t = u + λv` and the traveling
/// variable is `ξ = kz − ωt`. Every closed-form solution depends on `λ` and
/// `γ = ω² − k²` only through the product `λγ`; the full triple is needed
/// only when embedding back into `(z, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrameParams {
    pub lambda: f64,
    pub k: f64,
    pub omega: f64,
    pub gamma: f64,
    pub r: f64,
    pub xi0: f64,
}

impl FrameParams {
    pub fn new(lambda: f64, k: f64, omega: f64, xi0: f64) -> Result<Self> {
        if ![lambda, k, omega, xi0].iter().all(|v| v.is_finite()) {
            return Err(Error::FrameDegenerate("frame parameters must be finite".into()));
        }
        if lambda == 0.0 {
            return Err(Error::FrameDegenerate("lambda must be nonzero".into()));
        }
        let gamma = omega * omega - k * k;
        if gamma == 0.0 {
            return Err(Error::FrameDegenerate(format!(
                "k = ±omega (k = {k}, omega = {omega}) gives gamma = 0"
            )));
        }
        Ok(FrameParams {
            lambda,
            k,
            omega,
            gamma,
            r: 1.0 / (lambda * gamma),
            xi0,
        })
    }

    /// Normalized frame with `λ = lambda_gamma`, `k = 0`, `ω = 1`, so `γ = 1`.
    pub fn from_lambda_gamma(lambda_gamma: f64, xi0: f64) -> Result<Self> {
        FrameParams::new(lambda_gamma, 0.0, 1.0, xi0)
    }

    pub fn lambda_gamma(&self) -> f64 {
        self.lambda * self.gamma
    }

    pub fn with_xi0(mut self, xi0: f64) -> Self {
        self.xi0 = xi0;
        self
    }

    /// Traveling coordinate of a point `(z, t)`.
    pub fn xi(&self, z: f64, t: f64) -> f64 {
        self.k * z - self.omega * t
    }
}

/// The catalogued equations, plus everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyLabel {
    Liouville,
    Tzitzeica,
    DoddBullough,
    TzitzeicaDoddBullough,
    DoddBulloughMikhailov,
    SineGordon,
    SinhGordon,
    GenericTwoExponential,
}

impl FamilyLabel {
    pub const CATALOGUED: [FamilyLabel; 7] = [
        FamilyLabel::Liouville,
        FamilyLabel::Tzitzeica,
        FamilyLabel::DoddBullough,
        FamilyLabel::TzitzeicaDoddBullough,
        FamilyLabel::DoddBulloughMikhailov,
        FamilyLabel::SineGordon,
        FamilyLabel::SinhGordon,
    ];

    /// Families whose solutions are written natively in `ψ`.
    pub fn is_gordon(self) -> bool {
        matches!(self, FamilyLabel::SineGordon | FamilyLabel::SinhGordon)
    }

    /// Families reducible to the Weierstrass cubic.
    pub fn has_cubic(self) -> bool {
        matches!(
            self,
            FamilyLabel::Liouville
                | FamilyLabel::Tzitzeica
                | FamilyLabel::DoddBullough
                | FamilyLabel::TzitzeicaDoddBullough
                | FamilyLabel::DoddBulloughMikhailov
        )
    }

    /// Command-line spelling, e.g. `sine-gordon`.
    pub fn slug(self) -> &'static str {
        match self {
            FamilyLabel::Liouville => "liouville",
            FamilyLabel::Tzitzeica => "tzitzeica",
            FamilyLabel::DoddBullough => "dodd-bullough",
            FamilyLabel::TzitzeicaDoddBullough => "tzitzeica-dodd-bullough",
            FamilyLabel::DoddBulloughMikhailov => "dodd-bullough-mikhailov",
            FamilyLabel::SineGordon => "sine-gordon",
            FamilyLabel::SinhGordon => "sinh-gordon",
            FamilyLabel::GenericTwoExponential => "generic",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        let norm = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        FamilyLabel::CATALOGUED
            .iter()
            .chain(std::iter::once(&FamilyLabel::GenericTwoExponential))
            .copied()
            .find(|f| f.slug() == norm || format!("{f:?}").to_ascii_lowercase() == norm.replace('-', ""))
    }
}

/// Identifies the catalogued family from `(α, β, a, b)` by exact match.
pub fn classify_family(params: &EquationParams) -> Result<FamilyLabel> {
    if params.alpha == 0.0 && params.beta == 0.0 {
        return Err(Error::InvalidParams("alpha and beta are both zero".into()));
    }
    let found = FamilyLabel::CATALOGUED
        .iter()
        .copied()
        .find(|f| EquationParams::for_family(*f).as_ref() == Some(params));
    Ok(found.unwrap_or(FamilyLabel::GenericTwoExponential))
}
