use std::collections::BTreeMap;
use std::path::PathBuf;

use expwave::{Branch, CaseLabel, EquationParams, FamilyLabel, FrameParams};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DEFAULT_XI_MIN: f64 = -5.0;
pub const DEFAULT_XI_MAX: f64 = 5.0;
pub const DEFAULT_VERIFY_POINTS: usize = 1000;
pub const DEFAULT_SAMPLE_POINTS: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Classify,
    Solve,
    Sample,
    Verify,
    Figures,
}

/// One job, as read from `--config` or assembled from flags.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JobConfig {
    pub command: Option<CommandKind>,
    pub family: Option<String>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c1: Option<f64>,
    pub case: Option<String>,
    pub lambda: Option<f64>,
    pub k: Option<f64>,
    pub omega: Option<f64>,
    pub lambda_gamma: Option<f64>,
    pub xi0: Option<f64>,
    pub branch: Option<String>,
    pub xi_min: Option<f64>,
    pub xi_max: Option<f64>,
    pub n: Option<usize>,
    pub out: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
    pub tolerance: Option<f64>,
    /// Per-oracle thresholds, keyed by oracle name.
    pub tolerances: BTreeMap<String, f64>,
}

macro_rules! overlay {
    ($base:expr, $top:expr, $($field:ident),*) => {
        $( if $top.$field.is_some() { $base.$field = $top.$field.clone(); } )*
    };
}

fn config_error(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

impl JobConfig {
    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| config_error(format!("{}: {e}", path.display())))
    }

    /// Fields set in `top` win.
    pub fn merged(mut self, top: JobConfig) -> Self {
        overlay!(
            self, top, command, family, alpha, beta, a, b, c1, case, lambda, k, omega,
            lambda_gamma, xi0, branch, xi_min, xi_max, n, out, out_dir, tolerance
        );
        self.tolerances.extend(top.tolerances);
        self
    }

    fn raw_given(&self) -> bool {
        self.alpha.is_some() || self.beta.is_some() || self.a.is_some() || self.b.is_some()
    }

    pub fn params(&self) -> Result<(FamilyLabel, EquationParams), CliError> {
        match (&self.family, self.raw_given()) {
            (Some(_), true) => Err(config_error("give either --family or --alpha/--beta/--a/--b, not both")),
            (None, false) => Err(config_error("missing --family or --alpha/--beta/--a/--b")),
            (Some(name), false) => {
                let family = FamilyLabel::from_slug(name)
                    .ok_or_else(|| config_error(format!("unknown family '{name}'")))?;
                let params = EquationParams::for_family(family)
                    .ok_or_else(|| config_error(format!("family '{name}' has no canonical coefficients")))?;
                Ok((family, params))
            }
            (None, true) => {
                let need = |v: Option<f64>, name: &str| v.ok_or_else(|| config_error(format!("missing --{name}")));
                let alpha = need(self.alpha, "alpha")?;
                let beta = self.beta.unwrap_or(0.0);
                let a = need(self.a, "a")?;
                let b = if beta == 0.0 { self.b.unwrap_or(0.0) } else { need(self.b, "b")? };
                let params = EquationParams::new(alpha, beta, a, b).map_err(|e| config_error(e.to_string()))?;
                let family = expwave::classify_family(&params).map_err(|e| config_error(e.to_string()))?;
                Ok((family, params))
            }
        }
    }

    pub fn c1(&self) -> Result<f64, CliError> {
        self.c1.ok_or_else(|| config_error("missing --c1"))
    }

    /// `--lambda-gamma v` stands for `λ = v, k = 0, ω = 1`.
    pub fn frame(&self) -> Result<FrameParams, CliError> {
        let xi0 = self.xi0.unwrap_or(0.0);
        let full = self.lambda.is_some() || self.omega.is_some() || self.k.is_some();
        let frame = match (self.lambda_gamma, full) {
            (Some(_), true) => {
                return Err(config_error("give either --lambda-gamma or --lambda/--k/--omega, not both"))
            }
            (Some(lg), false) => FrameParams::new(lg, 0.0, 1.0, xi0),
            (None, true) => {
                let lambda = self.lambda.ok_or_else(|| config_error("missing --lambda"))?;
                let omega = self.omega.ok_or_else(|| config_error("missing --omega"))?;
                FrameParams::new(lambda, self.k.unwrap_or(0.0), omega, xi0)
            }
            (None, false) => return Err(config_error("missing --lambda-gamma or --lambda/--k/--omega")),
        };
        frame.map_err(|e| config_error(e.to_string()))
    }

    pub fn branch(&self) -> Result<Branch, CliError> {
        match &self.branch {
            None => Ok(Branch::Plus),
            Some(s) => s.parse().map_err(|e: expwave::Error| config_error(e.to_string())),
        }
    }

    pub fn expected_case(&self) -> Result<Option<CaseLabel>, CliError> {
        self.case
            .as_deref()
            .map(|s| CaseLabel::from_slug(s).ok_or_else(|| config_error(format!("unknown case '{s}'"))))
            .transpose()
    }

    pub fn range(&self) -> Result<(f64, f64), CliError> {
        let lo = self.xi_min.unwrap_or(DEFAULT_XI_MIN);
        let hi = self.xi_max.unwrap_or(DEFAULT_XI_MAX);
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(config_error(format!("bad range [{lo}, {hi}]")));
        }
        Ok((lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file = JobConfig {
            family: Some("tzitzeica".into()),
            c1: Some(1.0),
            ..Default::default()
        };
        let top = JobConfig {
            c1: Some(2.0),
            ..Default::default()
        };
        let m = file.merged(top);
        assert_eq!(m.c1, Some(2.0));
        assert_eq!(m.family.as_deref(), Some("tzitzeica"));
    }

    #[test]
    fn lambda_gamma_shortcut() {
        let c = JobConfig {
            lambda_gamma: Some(0.5),
            ..Default::default()
        };
        let f = c.frame().unwrap();
        assert_eq!((f.lambda, f.k, f.omega), (0.5, 0.0, 1.0));
        assert_eq!(f.lambda_gamma(), 0.5);
    }

    #[test]
    fn family_and_raw_conflict() {
        let c = JobConfig {
            family: Some("liouville".into()),
            alpha: Some(1.0),
            ..Default::default()
        };
        assert!(c.params().is_err());
    }
}
