//! Fixtures shared by the benchmarks.

use expwave::reduction::lemniscatic_c1;
use expwave::{construct, Branch, FamilyLabel, FrameParams, Solution};

/// One representative solution per regime, with its frame.
pub fn representative_solutions() -> Vec<(&'static str, Solution, FrameParams)> {
    let cases = [
        ("liouville_soliton", FamilyLabel::Liouville, 1.0, 1.0),
        ("tzitzeica_dark", FamilyLabel::Tzitzeica, -1.5, 1.0),
        ("tzitzeica_lemniscatic", FamilyLabel::Tzitzeica, lemniscatic_c1(), 1.0),
        ("tzitzeica_general", FamilyLabel::Tzitzeica, 0.3, 1.0),
        ("sine_gordon_kink", FamilyLabel::SineGordon, 1.0, 1.0),
        ("sine_gordon_amplitude", FamilyLabel::SineGordon, 3.0, 1.0),
        ("sinh_gordon_amplitude", FamilyLabel::SinhGordon, 0.0, 1.0),
    ];
    cases
        .into_iter()
        .map(|(name, family, c1, lg)| {
            let frame = FrameParams::from_lambda_gamma(lg, 0.0).expect("frame");
            let sol = construct(family, c1, &frame, Branch::Plus, None).expect("solution");
            (name, sol, frame)
        })
        .collect()
}

/// Evenly spaced sample points, shifted off the grid origin.
pub fn points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * (i as f64 + 0.5) / n as f64).collect()
}
