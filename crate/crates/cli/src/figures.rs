use std::path::Path;

use expwave::reduction::lemniscatic_c1;
use expwave::{construct, Branch, FamilyLabel, FrameParams};
use serde::Serialize;

use crate::output::{linspace, num, write_atomic};
use crate::CliError;

pub const FIGURE_POINTS: usize = 601;

/// One plotted profile.
#[derive(Debug, Clone, Copy)]
struct Curve {
    label: &'static str,
    family: FamilyLabel,
    c1: f64,
    lambda_gamma: f64,
    branch: Branch,
    xi_min: f64,
    xi_max: f64,
}

struct Figure {
    file: &'static str,
    curves: Vec<Curve>,
}

#[derive(Serialize)]
struct CurveRecord {
    branch: Branch,
    case: expwave::CaseLabel,
    c1: f64,
    family: FamilyLabel,
    label: &'static str,
    lambda_gamma: f64,
    n: usize,
    xi0: f64,
    xi_max: f64,
    xi_min: f64,
}

#[derive(Serialize)]
struct FigureRecord {
    curves: Vec<CurveRecord>,
    file: &'static str,
}

fn curve(
    label: &'static str,
    family: FamilyLabel,
    c1: f64,
    lambda_gamma: f64,
    branch: Branch,
    range: (f64, f64),
) -> Curve {
    Curve {
        label,
        family,
        c1,
        lambda_gamma,
        branch,
        xi_min: range.0,
        xi_max: range.1,
    }
}

fn figures() -> Vec<Figure> {
    use Branch::{Minus, Plus};
    use FamilyLabel::*;
    let w = (-6.0, 6.0);
    vec![
        Figure {
            file: "fig1_liouville.csv",
            curves: vec![
                curve("soliton", Liouville, 1.0, 1.0, Plus, w),
                curve("periodic", Liouville, -1.0, 1.0, Plus, w),
                curve("rational", Liouville, 0.0, 1.0, Plus, w),
            ],
        },
        Figure {
            file: "fig2_tzitzeica_degenerate.csv",
            curves: vec![
                curve("dark_soliton", Tzitzeica, -1.5, 1.0, Plus, w),
                curve("singular_soliton", Tzitzeica, -1.5, 1.0, Minus, w),
                curve("periodic_singular_sec", Tzitzeica, -1.5, -1.0, Plus, w),
                curve("periodic_singular_csc", Tzitzeica, -1.5, -1.0, Minus, w),
            ],
        },
        Figure {
            file: "fig3_tzitzeica_elliptic.csv",
            curves: vec![
                curve("lemniscatic", Tzitzeica, lemniscatic_c1(), 1.0, Plus, w),
                curve("equianharmonic", Tzitzeica, 0.0, 1.0, Plus, w),
                curve("weierstrass", Tzitzeica, 1.0, 1.0, Plus, w),
            ],
        },
        Figure {
            file: "fig4_sine_kinks.csv",
            curves: vec![
                curve("kink_c1_plus", SineGordon, 1.0, 1.0, Plus, (-10.0, 10.0)),
                curve("kink_c1_minus", SineGordon, -1.0, -1.0, Plus, (-10.0, 10.0)),
            ],
        },
        Figure {
            file: "fig5_sine_amplitude.csv",
            curves: vec![
                curve("modulus_above_one", SineGordon, 0.0, -1.0, Plus, (-10.0, 10.0)),
                curve("modulus_below_one", SineGordon, -3.0, -1.0, Plus, (-10.0, 10.0)),
            ],
        },
        Figure {
            file: "fig6_sinh_arctanh.csv",
            curves: vec![
                curve("c1_plus_half", SinhGordon, 0.5, 1.0, Plus, w),
                curve("c1_minus_half", SinhGordon, -0.5, 1.0, Plus, w),
            ],
        },
        Figure {
            file: "fig7_sinh_amplitude.csv",
            curves: vec![
                curve("modulus_above_one", SinhGordon, -2.0, 1.0, Plus, w),
                curve("modulus_below_one", SinhGordon, 2.0, 1.0, Plus, w),
            ],
        },
    ]
}

/// Writes one long-format CSV per figure plus `figures.json` with the inputs.
pub fn write_figures(dir: &Path) -> Result<(), CliError> {
    let mut records = Vec::new();
    for fig in figures() {
        let mut csv = String::from("curve,xi,h,psi\n");
        let mut curves = Vec::new();
        for c in &fig.curves {
            let frame = FrameParams::from_lambda_gamma(c.lambda_gamma, 0.0)?;
            let sol = construct(c.family, c.c1, &frame, c.branch, None)?;
            for xi in linspace(c.xi_min, c.xi_max, FIGURE_POINTS) {
                let h = sol.evaluate_h(xi).ok();
                let psi = sol.evaluate_psi(xi).ok();
                csv.push_str(&format!("{},{},{},{}\n", c.label, num(Some(xi)), num(h), num(psi)));
            }
            curves.push(CurveRecord {
                branch: c.branch,
                case: sol.case(),
                c1: c.c1,
                family: c.family,
                label: c.label,
                lambda_gamma: c.lambda_gamma,
                n: FIGURE_POINTS,
                xi0: 0.0,
                xi_max: c.xi_max,
                xi_min: c.xi_min,
            });
        }
        write_atomic(&dir.join(fig.file), csv.as_bytes())?;
        records.push(FigureRecord {
            curves,
            file: fig.file,
        });
    }
    let sidecar = crate::output::json_line(&records)?;
    write_atomic(&dir.join("figures.json"), sidecar.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIGURE_FILES: [&str; 7] = [
        "fig1_liouville.csv",
        "fig2_tzitzeica_degenerate.csv",
        "fig3_tzitzeica_elliptic.csv",
        "fig4_sine_kinks.csv",
        "fig5_sine_amplitude.csv",
        "fig6_sinh_arctanh.csv",
        "fig7_sinh_amplitude.csv",
    ];

    #[test]
    fn file_names_match_table() {
        let names: Vec<_> = figures().iter().map(|f| f.file).collect();
        assert_eq!(names, FIGURE_FILES);
    }

    #[test]
    fn every_curve_constructs() {
        for fig in figures() {
            for c in fig.curves {
                let frame = FrameParams::from_lambda_gamma(c.lambda_gamma, 0.0).unwrap();
                construct(c.family, c.c1, &frame, c.branch, None)
                    .unwrap_or_else(|e| panic!("{} {}: {e}", fig.file, c.label));
            }
        }
    }
}
