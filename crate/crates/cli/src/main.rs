//! `expwave`: classify, construct, sample and verify traveling waves of
//! `ψ_uv = α e^{aψ} + β e^{bψ}` from the command line.

mod config;
mod figures;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use expwave::verify::{verify_solution, MIN_GRID_POINTS};
use expwave::{classify_case, construct, elliptic_data};
use serde_json::json;

use config::{CommandKind, JobConfig, DEFAULT_SAMPLE_POINTS, DEFAULT_VERIFY_POINTS};
use output::{emit, json_line, linspace, sample_csv};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Domain(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("verification failed")]
    Verification,
}

impl From<expwave::Error> for CliError {
    fn from(e: expwave::Error) -> Self {
        if e.is_domain() {
            CliError::Domain(e.to_string())
        } else {
            CliError::Config(e.to_string())
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "expwave", version, about = "Traveling waves of two-exponential wave equations")]
struct Cli {
    /// JSON job file; flags given on the command line take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Identify the family and, given --c1, the case and elliptic data.
    Classify(JobArgs),
    /// Print the solution descriptor as JSON.
    Solve(JobArgs),
    /// Tabulate a solution as CSV.
    Sample(JobArgs),
    /// Run the oracles and print their reports.
    Verify(JobArgs),
    /// Write the figure data sets.
    Figures(JobArgs),
}

#[derive(Args, Debug, Default)]
struct JobArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<f64>,
    /// Expected case; construction fails if the parameters select another.
    #[arg(long)]
    case: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<f64>,
    /// Sets λ to the value with k = 0, ω = 1.
    #[arg(long, allow_hyphen_values = true)]
    lambda_gamma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    xi0: Option<f64>,
    #[arg(long)]
    branch: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    xi_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    xi_max: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Threshold applied to every oracle.
    #[arg(long)]
    tolerance: Option<f64>,
}

impl JobArgs {
    fn into_config(self, command: CommandKind) -> JobConfig {
        JobConfig {
            command: Some(command),
            family: self.family,
            alpha: self.alpha,
            beta: self.beta,
            a: self.a,
            b: self.b,
            c1: self.c1,
            case: self.case,
            lambda: self.lambda,
            k: self.k,
            omega: self.omega,
            lambda_gamma: self.lambda_gamma,
            xi0: self.xi0,
            branch: self.branch,
            xi_min: self.xi_min,
            xi_max: self.xi_max,
            n: self.n,
            out: self.out,
            out_dir: self.out_dir,
            tolerance: self.tolerance,
            tolerances: Default::default(),
        }
    }
}

fn classify(job: &JobConfig) -> Result<(), CliError> {
    let (family, _) = job.params()?;
    let value = match job.c1 {
        None => json!({ "family": family }),
        Some(c1) => {
            let frame = job.frame()?;
            let case = classify_case(family, c1, &frame)?;
            let data = if family.has_cubic() {
                serde_json::to_value(elliptic_data(family, c1, &frame)?).map_err(|e| CliError::Io(e.to_string()))?
            } else {
                serde_json::Value::Null
            };
            json!({ "case": case, "elliptic_data": data, "family": family })
        }
    };
    emit(job.out.as_deref(), &json_line(&value)?)
}

fn solution(job: &JobConfig) -> Result<(expwave::Solution, expwave::FrameParams), CliError> {
    let (family, _) = job.params()?;
    let frame = job.frame()?;
    let sol = construct(family, job.c1()?, &frame, job.branch()?, job.expected_case()?)?;
    Ok((sol, frame))
}

fn verify(job: &JobConfig) -> Result<(), CliError> {
    let (sol, frame) = solution(job)?;
    let (lo, hi) = job.range()?;
    let n = job.n.unwrap_or(DEFAULT_VERIFY_POINTS);
    if n < MIN_GRID_POINTS {
        return Err(CliError::Config(format!("verify needs at least {MIN_GRID_POINTS} points")));
    }
    let reports: Vec<_> = verify_solution(&sol, &frame, lo, hi, n)?
        .into_iter()
        .map(|r| {
            let tol = job.tolerances.get(&r.oracle).copied().or(job.tolerance);
            match tol {
                Some(t) => r.with_tolerance(t),
                None => r,
            }
        })
        .collect();
    emit(job.out.as_deref(), &json_line(&reports)?)?;
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn run(job: &JobConfig) -> Result<(), CliError> {
    let command = job
        .command
        .ok_or_else(|| CliError::Config("no command given".into()))?;
    match command {
        CommandKind::Classify => classify(job),
        CommandKind::Solve => {
            let (sol, _) = solution(job)?;
            emit(job.out.as_deref(), &json_line(&sol.descriptor())?)
        }
        CommandKind::Sample => {
            let (sol, frame) = solution(job)?;
            let (lo, hi) = job.range()?;
            let xs = linspace(lo, hi, job.n.unwrap_or(DEFAULT_SAMPLE_POINTS));
            emit(job.out.as_deref(), &sample_csv(&sol, &frame, &xs))
        }
        CommandKind::Verify => verify(job),
        CommandKind::Figures => {
            let dir = job.out_dir.clone().unwrap_or_else(|| PathBuf::from("figures"));
            figures::write_figures(&dir)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = (|| {
        let base = match &cli.config {
            Some(path) => JobConfig::load(path)?,
            None => JobConfig::default(),
        };
        Ok::<_, CliError>(match cli.command {
            Some(Cmd::Classify(a)) => base.merged(a.into_config(CommandKind::Classify)),
            Some(Cmd::Solve(a)) => base.merged(a.into_config(CommandKind::Solve)),
            Some(Cmd::Sample(a)) => base.merged(a.into_config(CommandKind::Sample)),
            Some(Cmd::Verify(a)) => base.merged(a.into_config(CommandKind::Verify)),
            Some(Cmd::Figures(a)) => base.merged(a.into_config(CommandKind::Figures)),
            None => base,
        })
    })();
    match job.and_then(|j| run(&j)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Verification) {
                eprintln!("expwave: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
