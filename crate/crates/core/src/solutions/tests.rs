use std::f64::consts::PI;

use super::*;

fn frame(lg: f64) -> FrameParams {
    FrameParams::from_lambda_gamma(lg, 0.0).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn liouville_examples() {
    let s = liouville(1.0, &frame(1.0)).unwrap();
    assert_eq!(s.case(), CaseLabel::LiouvilleSoliton);
    assert_eq!(s.evaluate_h(0.0).unwrap(), -1.0);
    assert!(s.evaluate_h(40.0).unwrap().abs() < 1e-10);
    assert!(matches!(s.evaluate_psi(0.0), Err(Error::PsiUnavailable { .. })));
    let s = liouville(0.0, &frame(0.5)).unwrap();
    assert_eq!(s.evaluate_h(1.0).unwrap(), 1.0);
    assert!(matches!(s.evaluate_h(0.0), Err(Error::Singular { .. })));
    let s = liouville(1.0, &frame(-1.0)).unwrap();
    assert_eq!(s.case(), CaseLabel::LiouvillePeriodic);
    assert!(matches!(s.singularities(), Singularities::Lattice { .. }));
}

#[test]
fn dark_soliton_center_and_background() {
    let s = tzitzeica(-1.5, &frame(1.0), Branch::Plus).unwrap();
    assert_eq!(s.case(), CaseLabel::Degenerate1a);
    assert!(close(s.evaluate_h(0.0).unwrap(), -0.5, 1e-15));
    assert!(close(s.evaluate_h(60.0).unwrap(), 1.0, 1e-12));
    assert!(close(s.evaluate_h(-60.0).unwrap(), 1.0, 1e-12));
    let companion = tzitzeica(-1.5, &frame(1.0), Branch::Minus).unwrap();
    assert!(companion.evaluate_h(0.0).is_err());
    assert!(companion.evaluate_h(0.5).unwrap() > 1.0);
}

#[test]
fn equianharmonic_laurent_term() {
    let s = tzitzeica(0.0, &frame(1.0), Branch::Plus).unwrap();
    assert_eq!(s.case(), CaseLabel::Equianharmonic);
    let h = s.evaluate_h(0.1).unwrap();
    // 2(1/z² + g₃z⁴/28 + ...) with g₃ = −1/4
    let expected = 2.0 * (100.0 - 0.25 * 1e-4 / 28.0);
    assert!(close(h, expected, 1e-12), "{h}");
}

#[test]
fn dodd_bullough_examples() {
    let s = dodd_bullough(1.5, &frame(-1.0), Branch::Plus).unwrap();
    assert!(close(s.evaluate_h(0.0).unwrap(), -0.5, 1e-15));
    let db = dodd_bullough(0.0, &frame(0.8), Branch::Plus).unwrap();
    let tz = tzitzeica(0.0, &frame(-0.8), Branch::Plus).unwrap();
    for i in 1..20 {
        let xi = 0.173 * i as f64;
        assert_eq!(db.evaluate_h(xi).unwrap(), tz.evaluate_h(xi).unwrap());
    }
}

#[test]
fn tdb_degenerate_negation() {
    let f = FrameParams::from_lambda_gamma(-1.0, 0.4).unwrap();
    let tdb = tdb_dbm(FamilyLabel::TzitzeicaDoddBullough, 1.5, &f, Branch::Plus).unwrap();
    assert!(close(tdb.evaluate_h(-0.4).unwrap(), 0.5, 1e-15));
    assert!(tdb_dbm(FamilyLabel::Tzitzeica, 1.5, &f, Branch::Plus).is_err());
}

#[test]
fn sine_gordon_kinks() {
    let s = sine_gordon(1.0, &frame(1.0), Branch::Plus).unwrap();
    assert!(close(s.evaluate_psi(0.0).unwrap(), PI, 1e-15));
    assert!(close(s.evaluate_psi(50.0).unwrap(), 2.0 * PI, 1e-12));
    assert!(s.evaluate_psi(-50.0).unwrap().abs() < 1e-12);
    let s = sine_gordon(-1.0, &frame(-1.0), Branch::Plus).unwrap();
    assert!(s.evaluate_psi(0.0).unwrap().abs() < 1e-15);
    assert!(matches!(sine_gordon(1.0, &frame(-1.0), Branch::Plus), Err(Error::SignDomain(_))));
    assert!(matches!(sine_gordon(-1.0, &frame(1.0), Branch::Plus), Err(Error::SignDomain(_))));
}

#[test]
fn sine_gordon_amplitude_boundedness() {
    // c₁ = 0 needs λγ < 0 and gives m = 2
    let s = sine_gordon(0.0, &frame(-1.0), Branch::Plus).unwrap();
    assert_eq!(s.constants()["m"], 2.0);
    assert!(!s.is_unbounded());
    let s = sine_gordon(3.0, &frame(1.0), Branch::Plus).unwrap();
    assert!(s.is_unbounded());
    assert!(sine_gordon(3.0, &frame(-1.0), Branch::Plus).is_err());
}

#[test]
fn sinh_gordon_examples() {
    let lg = 2.0;
    let s = sinh_gordon(-0.5, &frame(lg), Branch::Plus).unwrap();
    // κ = √(2/λγ) = 1, so ξ = −1 puts e^{−1} inside the arctanh
    let psi = s.evaluate_psi(-1.0).unwrap();
    let t = (-1.0f64).exp();
    assert!(close(psi, ((1.0 + t) / (1.0 - t)).ln(), 1e-15));
    assert!((psi - 0.771_936_832_905_304_8).abs() < 1e-15);
    assert!(s.evaluate_psi(0.5).unwrap_err().is_domain());
    let s = sinh_gordon(0.5, &frame(1.0), Branch::Plus).unwrap();
    assert_eq!(s.evaluate_psi(0.0).unwrap(), 0.0);
    assert!(sinh_gordon(0.5, &frame(-1.0), Branch::Plus).is_err());
    assert!(sinh_gordon(0.0, &frame(-1.0), Branch::Plus).is_err());
    let bounded = sinh_gordon(-1.0, &frame(-1.0), Branch::Plus).unwrap();
    assert!(!bounded.is_unbounded());
    assert!(bounded.singularities().is_none());
    let ns = sinh_gordon(-1.0, &frame(1.0), Branch::Plus).unwrap();
    assert!(matches!(ns.singularities(), Singularities::Lattice { .. }));
}

#[test]
fn psi_is_log_h() {
    let s = tzitzeica(0.3, &frame(1.0), Branch::Plus).unwrap();
    for i in 1..30 {
        let xi = 0.21 * i as f64;
        if let (Ok(h), Ok(psi)) = (s.evaluate_h(xi), s.evaluate_psi(xi)) {
            assert_eq!(psi, h.ln());
        }
    }
}

#[test]
fn case_mismatch_reported() {
    let err = construct(
        FamilyLabel::Tzitzeica,
        0.3,
        &frame(1.0),
        Branch::Plus,
        Some(CaseLabel::Lemniscatic),
    )
    .unwrap_err();
    assert!(matches!(err, Error::CaseMismatch { .. }));
}

#[test]
fn descriptor_round_trip() {
    let f = FrameParams::new(0.7, 1.0, 2.0, 0.25).unwrap();
    let s = tzitzeica(0.3, &f, Branch::Plus).unwrap();
    let json = serde_json::to_string(&s.descriptor()).unwrap();
    let back: SolutionDescriptor = serde_json::from_str(&json).unwrap();
    let t = Solution::from_descriptor(&back).unwrap();
    for i in 0..50 {
        let xi = -3.0 + 0.123 * i as f64;
        let (a, b) = (s.evaluate_h(xi), t.evaluate_h(xi));
        assert_eq!(a.ok(), b.ok());
    }
}

#[test]
fn implicit_relation_basics() {
    let rel = implicit_relation(FamilyLabel::Tzitzeica, &frame(4.0)).unwrap();
    assert_eq!(rel.slope, 0.5);
    assert!(close(rel.lhs(1e-6).unwrap() / 1e-6, 1.0, 1e-15));
    let rel = implicit_relation(FamilyLabel::SinhGordon, &frame(2.0)).unwrap();
    assert_eq!(rel.slope, 0.5);
    assert!(implicit_relation(FamilyLabel::SineGordon, &frame(1.0)).is_err());
    assert!(implicit_relation(FamilyLabel::Liouville, &frame(1.0)).is_err());
    assert!(implicit_relation(FamilyLabel::DoddBullough, &frame(1.0)).is_err());
}
