use crate::error::{Error, Result};
use crate::reduction::{classify_case, elliptic_data, CaseLabel, FamilyLabel, FrameParams};
use crate::specfun::{WeierstrassInvariants, WeierstrassP};

use super::kernel::Kernel;
use super::{Branch, SignMap, Solution};

fn check_case(requested: Option<CaseLabel>, actual: CaseLabel) -> Result<()> {
    match requested {
        Some(r) if r != actual => Err(Error::CaseMismatch { requested: r, actual }),
        _ => Ok(()),
    }
}

/// Builds the solution for any catalogued family, optionally insisting on a case.
pub fn construct(
    family: FamilyLabel,
    c1: f64,
    frame: &FrameParams,
    branch: Branch,
    expected: Option<CaseLabel>,
) -> Result<Solution> {
    let sol = match family {
        FamilyLabel::Liouville => liouville(c1, frame)?,
        FamilyLabel::Tzitzeica => tzitzeica(c1, frame, branch)?,
        FamilyLabel::DoddBullough => dodd_bullough(c1, frame, branch)?,
        FamilyLabel::TzitzeicaDoddBullough | FamilyLabel::DoddBulloughMikhailov => {
            tdb_dbm(family, c1, frame, branch)?
        }
        FamilyLabel::SineGordon => sine_gordon(c1, frame, branch)?,
        FamilyLabel::SinhGordon => sinh_gordon(c1, frame, branch)?,
        FamilyLabel::GenericTwoExponential => return Err(Error::UnsupportedFamily(family)),
    };
    check_case(expected, sol.case())?;
    Ok(sol)
}

/// Liouville: `sech²` soliton, `sec²` periodic wave, or the rational solution.
pub fn liouville(c1: f64, frame: &FrameParams) -> Result<Solution> {
    let case = classify_case(FamilyLabel::Liouville, c1, frame)?;
    let lg = frame.lambda_gamma();
    let kernel = match case {
        CaseLabel::LiouvilleSoliton => Kernel::Hyperbolic {
            base: 0.0,
            amp: -c1,
            k: (c1 / (2.0 * lg)).sqrt(),
            singular: false,
        },
        CaseLabel::LiouvillePeriodic => Kernel::Trigonometric {
            base: 0.0,
            amp: -c1,
            k: (-c1 / (2.0 * lg)).sqrt(),
            singular: false,
        },
        _ => Kernel::InverseSquare { amp: 2.0 * lg },
    };
    Ok(Solution::assemble(
        FamilyLabel::Liouville,
        case,
        Branch::Plus,
        c1,
        frame,
        kernel,
        SignMap::default(),
        false,
    ))
}

/// Tzitzeica profile in its own `(c₁, λγ)`.
fn tzitzeica_kernel(c1: f64, lg: f64, case: CaseLabel, branch: Branch) -> Result<Kernel> {
    let kernel = match case {
        CaseLabel::Degenerate1a => {
            let k = 0.5 * (3.0 / lg).sqrt();
            match branch {
                Branch::Plus => Kernel::Hyperbolic { base: 1.0, amp: -1.5, k, singular: false },
                Branch::Minus => Kernel::Hyperbolic { base: 1.0, amp: 1.5, k, singular: true },
            }
        }
        CaseLabel::Degenerate1b => Kernel::Trigonometric {
            base: 1.0,
            amp: -1.5,
            k: 0.5 * (3.0 / -lg).sqrt(),
            singular: branch == Branch::Minus,
        },
        CaseLabel::Lemniscatic => {
            let base = 4f64.powf(-1.0 / 3.0);
            Kernel::Cnoidal {
                base,
                amp: -lg.signum() * 3f64.sqrt() * base,
                k: 3f64.powf(0.25) / (2f64.cbrt() * lg.abs().sqrt()),
                m: 0.5,
            }
        }
        CaseLabel::Equianharmonic | CaseLabel::GeneralWeierstrass => {
            let frame = FrameParams::from_lambda_gamma(lg, 0.0)?;
            let d = elliptic_data(FamilyLabel::Tzitzeica, c1, &frame)?;
            Kernel::Weierstrass {
                wp: WeierstrassP::new(WeierstrassInvariants::new(d.g2, d.g3)),
                scale: 4.0 / d.a3,
                shift: -d.a2 / (3.0 * d.a3),
            }
        }
        other => {
            return Err(Error::CaseMismatch {
                requested: other,
                actual: CaseLabel::GeneralWeierstrass,
            })
        }
    };
    Ok(kernel)
}

/// Tzitzeica: dark and singular solitons, periodic blow-up waves, the
/// equianharmonic and lemniscatic special cases, and the general `℘` solution.
pub fn tzitzeica(c1: f64, frame: &FrameParams, branch: Branch) -> Result<Solution> {
    let case = classify_case(FamilyLabel::Tzitzeica, c1, frame)?;
    let kernel = tzitzeica_kernel(c1, frame.lambda_gamma(), case, branch)?;
    Ok(Solution::assemble(
        FamilyLabel::Tzitzeica,
        case,
        branch,
        c1,
        frame,
        kernel,
        SignMap::default(),
        false,
    ))
}

/// Dodd–Bullough: the Tzitzeica solution at `(−c₁, −λγ)`.
pub fn dodd_bullough(c1: f64, frame: &FrameParams, branch: Branch) -> Result<Solution> {
    mapped(FamilyLabel::DoddBullough, c1, frame, branch)
}

/// Tzitzeica–Dodd–Bullough, `h(ξ) = −h_DB(−ξ)`, and
/// Dodd–Bullough–Mikhailov, `h(ξ) = −h_Tz(−ξ)`.
pub fn tdb_dbm(family: FamilyLabel, c1: f64, frame: &FrameParams, branch: Branch) -> Result<Solution> {
    match family {
        FamilyLabel::TzitzeicaDoddBullough | FamilyLabel::DoddBulloughMikhailov => {
            mapped(family, c1, frame, branch)
        }
        other => Err(Error::UnsupportedFamily(other)),
    }
}

fn mapped(family: FamilyLabel, c1: f64, frame: &FrameParams, branch: Branch) -> Result<Solution> {
    let case = classify_case(family, c1, frame)?;
    let lg = frame.lambda_gamma();
    let (tz_c1, tz_lg, map) = match family {
        FamilyLabel::DoddBullough => (-c1, -lg, SignMap::default()),
        FamilyLabel::TzitzeicaDoddBullough => (-c1, -lg, SignMap { negate: true, reflect: true }),
        FamilyLabel::DoddBulloughMikhailov => (c1, lg, SignMap { negate: true, reflect: true }),
        other => return Err(Error::UnsupportedFamily(other)),
    };
    let kernel = tzitzeica_kernel(tz_c1, tz_lg, case, branch)?;
    Ok(Solution::assemble(family, case, branch, c1, frame, kernel, map, false))
}

fn sign_domain(family: FamilyLabel, c1: f64, lg: f64) -> Error {
    Error::SignDomain(format!(
        "{} with c1 = {c1} has no real solution for lambda*gamma = {lg}",
        family.slug()
    ))
}

/// sine-Gordon: kinks at `c₁ = ±1`, Jacobi-amplitude waves otherwise.
pub fn sine_gordon(c1: f64, frame: &FrameParams, branch: Branch) -> Result<Solution> {
    let family = FamilyLabel::SineGordon;
    let case = classify_case(family, c1, frame)?;
    let lg = frame.lambda_gamma();
    let s = branch.sign();
    let (kernel, unbounded) = match case {
        CaseLabel::KinkC1Plus if lg > 0.0 => (
            Kernel::KinkArctan { kappa: 1.0 / lg.sqrt(), shift: 0.0, sign: s },
            false,
        ),
        CaseLabel::KinkC1Minus if lg < 0.0 => (
            Kernel::KinkArctan {
                kappa: 1.0 / (-lg).sqrt(),
                shift: -std::f64::consts::PI,
                sign: s,
            },
            false,
        ),
        CaseLabel::AmplitudeC1Zero | CaseLabel::AmplitudeGeneric => {
            let q = (c1 - 1.0) / (2.0 * lg);
            if q <= 0.0 {
                return Err(sign_domain(family, c1, lg));
            }
            let m = 2.0 / (1.0 - c1);
            (Kernel::Amplitude { kappa: q.sqrt(), m, sign: -s }, m <= 1.0)
        }
        _ => return Err(sign_domain(family, c1, lg)),
    };
    Ok(Solution::assemble(family, case, branch, c1, frame, kernel, SignMap::default(), unbounded))
}

/// sinh-Gordon: arctanh kinks at `c₁ = −½`, the `asinh∘tan` wave at
/// `c₁ = ½`, and amplitude solutions written through `sc` or `ns`.
pub fn sinh_gordon(c1: f64, frame: &FrameParams, branch: Branch) -> Result<Solution> {
    let family = FamilyLabel::SinhGordon;
    let case = classify_case(family, c1, frame)?;
    let lg = frame.lambda_gamma();
    let s = branch.sign();
    let (kernel, unbounded) = match case {
        CaseLabel::KinkC1Minus if lg > 0.0 => (
            Kernel::SinhArctanhExp { kappa: (2.0 / lg).sqrt(), sign: s },
            true,
        ),
        CaseLabel::KinkC1Plus if lg > 0.0 => (
            Kernel::SinhTan { kappa: (2.0 / lg).sqrt(), sign: s },
            true,
        ),
        CaseLabel::AmplitudeC1Zero | CaseLabel::AmplitudeGeneric => {
            let q = (2.0 * c1 + 1.0) / lg;
            if q > 0.0 {
                let m = (2.0 * c1 - 1.0) / (2.0 * c1 + 1.0);
                (Kernel::SinhAsinhSc { kappa: q.sqrt(), m, sign: s }, m <= 1.0)
            } else if lg > 0.0 && c1 < -0.5 {
                let kernel = Kernel::SinhAsinhNs {
                    kappa: (-q).sqrt(),
                    m: 2.0 / (2.0 * c1 + 1.0),
                    b: (-(c1 + 0.5)).sqrt(),
                    sign: s,
                };
                (kernel, true)
            } else {
                return Err(sign_domain(family, c1, lg));
            }
        }
        _ => return Err(sign_domain(family, c1, lg)),
    };
    Ok(Solution::assemble(family, case, branch, c1, frame, kernel, SignMap::default(), unbounded))
}
