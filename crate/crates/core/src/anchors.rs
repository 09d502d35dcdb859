//! Formula-to-code map: each formula the crate implements, the operation
//! implementing it and a test exercising it. The table lives in
//! `anchors.json` next to the manifest.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationAnchor {
    pub id: String,
    pub formula: String,
    /// `module::function`, relative to the crate root.
    pub operation: String,
    pub test: String,
}

/// Formulas that must each appear exactly once.
pub const IN_SCOPE: [&str; 37] = [
    "traveling-ode",
    "pde-embedding",
    "first-integral",
    "implicit-two-exponential",
    "liouville-soliton",
    "liouville-periodic",
    "liouville-rational",
    "tzitzeica-cubic",
    "tzitzeica-invariants",
    "weierstrass-equation",
    "weierstrass-degenerate-hyperbolic",
    "weierstrass-degenerate-trigonometric",
    "tzitzeica-dark-soliton",
    "tzitzeica-singular-soliton",
    "tzitzeica-periodic-sec",
    "tzitzeica-periodic-csc",
    "tzitzeica-equianharmonic",
    "tzitzeica-lemniscatic",
    "tzitzeica-weierstrass",
    "tzitzeica-implicit-cubic",
    "dodd-bullough-sign-map",
    "dodd-bullough-degenerate",
    "dodd-bullough-weierstrass",
    "dodd-bullough-implicit",
    "tzitzeica-dodd-bullough",
    "dodd-bullough-mikhailov",
    "sine-gordon-first-integral",
    "sine-gordon-kink",
    "sine-gordon-shifted-kink",
    "sine-gordon-amplitude",
    "jacobi-amplitude",
    "sinh-gordon-first-integral",
    "sinh-gordon-arctanh-kink",
    "sinh-gordon-gudermannian",
    "sinh-gordon-amplitude",
    "sinh-gordon-implicit-quartic",
    "hypergeometric-kernel",
];

/// Known formulas that are deliberately not implemented.
pub const OUT_OF_SCOPE: [&str; 6] = [
    "bernoulli-intermediate-steps",
    "sine-gordon-implicit-complex",
    "inverse-scattering",
    "backlund-multisoliton",
    "hyperelliptic-extension",
    "blow-up-analysis",
];

const TABLE: &str = include_str!("../anchors.json");

pub fn anchor_table() -> serde_json::Result<Vec<EquationAnchor>> {
    serde_json::from_str(TABLE)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub pass: bool,
    pub anchors: usize,
    pub gaps: Vec<String>,
}

/// Checks the table against the in-scope list. `operation_exists` resolves
/// `module::function` names and `tests` holds every test function name.
pub fn coverage_audit(
    table: &[EquationAnchor],
    operation_exists: impl Fn(&str) -> bool,
    tests: &BTreeSet<String>,
) -> AuditReport {
    let mut gaps = Vec::new();
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for a in table {
        *seen.entry(a.id.as_str()).or_default() += 1;
        if OUT_OF_SCOPE.contains(&a.id.as_str()) {
            gaps.push(format!("{}: out of scope, must not be in the table", a.id));
            continue;
        }
        if !IN_SCOPE.contains(&a.id.as_str()) {
            gaps.push(format!("{}: unknown anchor", a.id));
        }
        if a.formula.trim().is_empty() {
            gaps.push(format!("{}: empty formula", a.id));
        }
        if a.operation.trim().is_empty() || !operation_exists(&a.operation) {
            gaps.push(format!("{}: operation '{}' not found", a.id, a.operation));
        }
        if a.test.trim().is_empty() || !tests.contains(&a.test) {
            gaps.push(format!("{}: test '{}' not found", a.id, a.test));
        }
    }
    for id in IN_SCOPE {
        match seen.get(id).copied().unwrap_or(0) {
            1 => {}
            0 => gaps.push(format!("{id}: missing")),
            n => gaps.push(format!("{id}: listed {n} times")),
        }
    }
    AuditReport {
        pass: gaps.is_empty(),
        anchors: table.len(),
        gaps,
    }
}
