use std::process::{Command, Output};

use expwave::{Solution, SolutionDescriptor};

fn expwave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expwave")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_with_constant_reports_case_and_invariants() {
    let o = expwave(&["classify", "--family", "tzitzeica", "--c1", "0", "--lambda-gamma", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["case"], "Equianharmonic");
    assert_eq!(v["elliptic_data"]["g2"], 0.0);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["case", "elliptic_data", "family"]);
}

#[test]
fn classify_generic_tuple() {
    let o = expwave(&["classify", "--alpha", "2", "--beta", "1", "--a", "3", "--b", "-1"]);
    assert_eq!(stdout(&o).trim(), r#"{"family":"GenericTwoExponential"}"#);
}

#[test]
fn solve_descriptor_round_trips_exactly() {
    let o = expwave(&["solve", "--family", "tzitzeica", "--c1", "1", "--lambda-gamma", "1", "--xi0", "0.3"]);
    assert_eq!(o.status.code(), Some(0));
    let d: SolutionDescriptor = serde_json::from_str(&stdout(&o)).unwrap();
    let sol = Solution::from_descriptor(&d).unwrap();
    let again = Solution::from_descriptor(&serde_json::from_str(&stdout(&o)).unwrap()).unwrap();
    for i in 0..50 {
        let xi = -2.0 + 0.1 * i as f64;
        assert_eq!(
            sol.evaluate_h(xi).ok().map(f64::to_bits),
            again.evaluate_h(xi).ok().map(f64::to_bits)
        );
    }
    assert_eq!(sol.descriptor(), d);
}

#[test]
fn sample_leaves_psi_empty_where_h_is_negative() {
    let o = expwave(&[
        "sample", "--family", "tzitzeica", "--c1", "-1.5", "--lambda-gamma", "1", "--xi-min", "-0.2",
        "--xi-max", "0.2", "--n", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mid: Vec<&str> = text.lines().nth(3).unwrap().split(',').collect();
    assert!(mid[1].parse::<f64>().unwrap() < 0.0);
    assert_eq!(mid[2], "");
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn tight_tolerance_fails_verification() {
    let o = expwave(&["verify", "--family", "liouville", "--c1", "1", "--lambda-gamma", "1", "--tolerance", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == false));
}

#[test]
fn exit_codes() {
    assert_eq!(expwave(&["solve", "--family", "nope", "--c1", "1", "--lambda-gamma", "1"]).status.code(), Some(2));
    assert_eq!(expwave(&["solve", "--family", "liouville", "--c1", "1"]).status.code(), Some(2));
    assert_eq!(
        expwave(&["solve", "--family", "liouville", "--alpha", "1", "--c1", "1", "--lambda-gamma", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(expwave(&["verify", "--family", "liouville", "--c1", "1", "--lambda-gamma", "0"]).status.code(), Some(2));
    assert_eq!(
        expwave(&["solve", "--family", "sine-gordon", "--c1", "1", "--lambda-gamma", "-1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        expwave(&[
            "solve", "--family", "tzitzeica", "--c1", "1", "--lambda-gamma", "1", "--case", "lemniscatic"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("job.json");
    std::fs::write(
        &cfg,
        r#"{"command":"verify","family":"sine-gordon","c1":1.0,"lambda_gamma":1.0,"n":200,"tolerances":{"pde_residual":1e-30}}"#,
    )
    .unwrap();
    let path = cfg.to_str().unwrap();
    let o = expwave(&["--config", path]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for r in v.as_array().unwrap() {
        assert_eq!(r["pass"], r["oracle"] != "pde_residual");
    }
    let o = expwave(&["classify", "--config", path, "--c1", "-1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["case"], "KinkC1Minus");

    std::fs::write(&cfg, r#"{"command":"solve","famly":"liouville"}"#).unwrap();
    assert_eq!(expwave(&["--config", path]).status.code(), Some(2));
}

#[test]
fn figures_writes_every_data_set() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("figs");
    let o = expwave(&["figures", "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let sidecar: serde_json::Value =
        serde_json::from_slice(&std::fs::read(out.join("figures.json")).unwrap()).unwrap();
    let figs = sidecar.as_array().unwrap();
    assert_eq!(figs.len(), 7);
    for fig in figs {
        let name = fig["file"].as_str().unwrap();
        let text = std::fs::read_to_string(out.join(name)).unwrap();
        assert!(text.starts_with("curve,xi,h,psi\n"));
        let curves = fig["curves"].as_array().unwrap().len();
        assert_eq!(text.lines().count(), 1 + curves * 601);
    }
    assert!(out.join("fig1_liouville.csv").exists());
    assert!(out.join("fig7_sinh_amplitude.csv").exists());
}
