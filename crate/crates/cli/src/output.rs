use std::fs;
use std::io::Write;
use std::path::Path;

use expwave::verify::{derivatives, FD_LEVELS, FD_STEP_FRACTION};
use expwave::{traveling_ode, FrameParams, Profile, Solution};

use crate::CliError;

/// Writes through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(io)?;
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(bytes).map_err(io)?;
    f.sync_all().map_err(io)?;
    drop(f);
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io(e)
    })
}

pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// Compact JSON with keys in alphabetical order and a trailing newline.
pub fn json_line<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let v = serde_json::to_value(value).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(format!("{v}\n"))
}

/// 17 significant digits; empty for unavailable values.
pub fn num(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_finite() => format!("{x:.16e}"),
        _ => String::new(),
    }
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
                }
            })
            .collect(),
    }
}

/// Pointwise ODE residual in the same normalization as the grid oracle.
pub fn pointwise_ode_residual(sol: &Solution, frame: &FrameParams, xi: f64) -> Option<f64> {
    let ode = traveling_ode(&Profile::params(sol), frame).ok()?;
    let step = FD_STEP_FRACTION * sol.length_scale().min(sol.distance_to_singularity(xi));
    if !(step > 0.0) {
        return None;
    }
    let (v, d1, d2) = derivatives(|x| sol.primary(x), xi, step, FD_LEVELS).ok()?;
    if sol.is_psi_native() {
        let rhs = ode.psi_second_derivative(v);
        Some((d2 - rhs) / rhs.abs().max(1.0))
    } else {
        let f = ode.f(v).ok()?;
        Some((v * d2 - d1 * d1 - f) / f.abs().max(1.0))
    }
}

pub fn sample_csv(sol: &Solution, frame: &FrameParams, xs: &[f64]) -> String {
    let mut s = String::from("xi,h,psi,ode_residual\n");
    for &xi in xs {
        let h = sol.evaluate_h(xi).ok();
        let psi = sol.evaluate_psi(xi).ok();
        let r = pointwise_ode_residual(sol, frame, xi);
        s.push_str(&format!("{},{},{},{}\n", num(Some(xi)), num(h), num(psi), num(r)));
    }
    s
}
