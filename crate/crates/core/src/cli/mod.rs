//! Command implementations behind the `gadent` binary.

pub mod config;
pub mod csv;
pub mod plot;
pub mod verify;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::analysis::{classify_with, sweep_grid, uniform_grid, NoiseMode, SweepResult};
use crate::entanglement::negativity;
use crate::fano::{fano_to_density, make_bell_diagonal};
use config::{ConfigError, InitialState, RunConfig};
use verify::{run_verify, VerifyLevel, VerifyOptions};

/// Environment variable capping the worker threads used for grid rows.
pub const THREADS_ENV: &str = "GADENT_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0} hard verification check(s) failed")]
    Verification(usize),
}

impl CliError {
    /// 1 config, 2 numerical, 3 verification. I/O problems count as
    /// configuration errors (bad paths).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => 1,
            CliError::Numerical(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::InvalidGrid(msg) => CliError::Config(ConfigError::Grid(msg)),
            crate::Error::ParameterOutOfRange { .. } | crate::Error::UnphysicalParameters { .. } => {
                CliError::Config(ConfigError::Unphysical(e))
            }
            other => CliError::Numerical(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gadent", version, about = "Two-qubit entanglement under generalized amplitude damping")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Negativity against gamma, one curve per p.
    Sweep(RunArgs),
    /// Negativity over a (p, gamma) grid, or over initial states.
    Grid(RunArgs),
    /// Run the self-check suite.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: VerifyLevel,
        /// Use the Kraus set without the sqrt(gamma) factor (expected to fail).
        #[arg(long)]
        paper_literal_kraus: bool,
    },
    /// Write a gnuplot script for a CSV produced by sweep or grid.
    PlotScript {
        #[command(flatten)]
        run: RunArgs,
        /// CSV to plot; defaults to the configured output path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print the default configuration.
    Defaults,
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// bell:c1,c2,c3 | werner:x | fano:s1,s2,s3/t1,t2,t3/c11,...,c33
    #[arg(long)]
    pub initial: Option<String>,
    #[arg(long)]
    pub mode: Option<NoiseMode>,
    /// Comma-separated p values.
    #[arg(long, value_delimiter = ',')]
    pub p: Option<Vec<f64>>,
    #[arg(long)]
    pub p_count: Option<usize>,
    #[arg(long)]
    pub gamma_count: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub compare_formulas: bool,
    #[arg(long)]
    pub slope_eps: Option<f64>,
    #[arg(long)]
    pub kink_threshold: Option<f64>,
    #[arg(long)]
    pub zero_tol: Option<f64>,
}

impl RunArgs {
    /// Loads the config file (or defaults) and applies flag overrides.
    pub fn to_config(&self) -> Result<RunConfig, ConfigError> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        if let Some(spec) = &self.initial {
            cfg.initial = InitialState::parse_spec(spec)?;
        }
        if let Some(mode) = self.mode {
            cfg.mode = mode;
        }
        if let Some(p) = &self.p {
            cfg.p = Some(p.clone());
            cfg.p_count = None;
        }
        if let Some(n) = self.p_count {
            cfg.p = None;
            cfg.p_count = Some(n);
        }
        if let Some(n) = self.gamma_count {
            cfg.gamma = None;
            cfg.gamma_count = Some(n);
        }
        if let Some(out) = &self.out {
            cfg.out = Some(out.clone());
        }
        cfg.compare_formulas |= self.compare_formulas;
        if let Some(x) = self.slope_eps {
            cfg.detector.slope_eps = x;
        }
        if let Some(x) = self.kink_threshold {
            cfg.detector.kink_threshold = x;
        }
        if let Some(x) = self.zero_tol {
            cfg.detector.zero_tol = x;
        }
        Ok(cfg)
    }
}

/// What a command produced: a data file body and a human-readable report.
#[derive(Debug, Clone, Default)]
pub struct CommandOutput {
    pub file: Option<String>,
    pub report: String,
}

fn all_gaps(results: &[SweepResult]) -> bool {
    results.iter().all(|r| r.samples.iter().all(|s| s.negativity.is_none()))
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let run = cfg.resolve()?;
    let results = sweep_grid(&run.initial, &run.p_grid, &run.gamma_grid, run.mode)?;
    if all_gaps(&results) {
        return Err(CliError::Numerical("the channel annihilates the state at every grid point".into()));
    }
    let mut report = String::new();
    for r in &results {
        report.push_str(&format!("== p = {} ({}) ==\n{}\n", r.spec.p, run.mode, classify_with(r, &run.detector)));
        if run.compare_formulas {
            report.push_str(&format!("max_discrepancy: {:e}\n", r.max_discrepancy()));
        }
    }
    let file = csv::write_sweep_csv(&results, &cfg.to_toml(), &run.detector, run.compare_formulas);
    Ok(CommandOutput { file: Some(file), report })
}

/// Negativity of Bell-diagonal states (c1, c2, c3) over a (c2, c3) square;
/// `None` marks unphysical parameter points.
pub fn initial_state_surface(surface: &config::InitialSurface) -> Result<Vec<Vec<(f64, f64, Option<f64>)>>, CliError> {
    let axis: Vec<f64> = uniform_grid(surface.count)
        .into_iter()
        .map(|u| surface.c_min + u * (surface.c_max - surface.c_min))
        .collect();
    if axis.is_empty() {
        return Err(ConfigError::Grid("initial_surface.count must be positive".into()).into());
    }
    let mut rows = Vec::with_capacity(axis.len());
    for &c2 in &axis {
        let mut row = Vec::with_capacity(axis.len());
        for &c3 in &axis {
            let n = match make_bell_diagonal(surface.c1, c2, c3) {
                Ok(state) => Some(negativity(&fano_to_density(&state))?.clamped),
                Err(_) => None,
            };
            row.push((c2, c3, n));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn cmd_grid(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    if let Some(surface) = &cfg.initial_surface {
        let rows = initial_state_surface(surface)?;
        let physical = rows.iter().flatten().filter(|r| r.2.is_some()).count();
        let total = rows.iter().map(Vec::len).sum::<usize>();
        return Ok(CommandOutput {
            file: Some(csv::write_surface_csv(&rows, &cfg.to_toml())),
            report: format!("initial-state surface at c1 = {}: {physical}/{total} physical points\n", surface.c1),
        });
    }
    let run = cfg.resolve()?;
    let results = sweep_grid(&run.initial, &run.p_grid, &run.gamma_grid, run.mode)?;
    if all_gaps(&results) {
        return Err(CliError::Numerical("the channel annihilates the state at every grid point".into()));
    }
    let rows: usize = results.iter().map(|r| r.samples.len()).sum();
    let gaps: usize = results.iter().map(|r| r.gaps().count()).sum();
    Ok(CommandOutput {
        file: Some(csv::write_grid_csv(&results, &cfg.to_toml())),
        report: format!("{} grid: {} p rows, {rows} points, {gaps} annihilation gaps\n", run.mode, results.len()),
    })
}

pub fn cmd_verify(level: VerifyLevel, paper_literal_kraus: bool) -> Result<CommandOutput, (CommandOutput, CliError)> {
    let report = run_verify(VerifyOptions { level, paper_literal_kraus });
    let out = CommandOutput { file: None, report: format!("{report}\n") };
    match report.hard_failures() {
        0 => Ok(out),
        n => Err((out, CliError::Verification(n))),
    }
}

pub fn cmd_plot_script(csv_path: &Path) -> Result<CommandOutput, CliError> {
    let text = std::fs::read_to_string(csv_path)
        .map_err(|source| CliError::Io { path: csv_path.to_path_buf(), source })?;
    let script = plot::plot_script(csv_path, &text).map_err(|e| CliError::Config(ConfigError::Parse(e)))?;
    Ok(CommandOutput {
        file: Some(script),
        report: format!("plot script for {}\n", csv_path.display()),
    })
}

pub fn cmd_defaults() -> CommandOutput {
    CommandOutput { file: None, report: RunConfig::default().to_toml() }
}
