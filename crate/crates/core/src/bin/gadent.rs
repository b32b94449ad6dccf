use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use gadent::cli::{self, Cli, CliError, Command, CommandOutput};

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, body).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Writes the data file to `out` (or stdout) and the report to stdout (or
/// stderr when stdout carries the data).
fn emit(out: Option<&Path>, output: CommandOutput) -> Result<(), CliError> {
    match (output.file, out) {
        (Some(body), Some(path)) => {
            write_file(path, &body)?;
            print!("{}", output.report);
            println!("wrote {}", path.display());
        }
        (Some(body), None) => {
            print!("{body}");
            eprint!("{}", output.report);
        }
        (None, _) => print!("{}", output.report),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep(args) => {
            let cfg = args.to_config()?;
            emit(cfg.out.as_deref(), cli::cmd_sweep(&cfg)?)
        }
        Command::Grid(args) => {
            let cfg = args.to_config()?;
            emit(cfg.out.as_deref(), cli::cmd_grid(&cfg)?)
        }
        Command::Verify { level, paper_literal_kraus } => match cli::cmd_verify(level, paper_literal_kraus) {
            Ok(out) => emit(None, out),
            Err((out, err)) => {
                emit(None, out)?;
                Err(err)
            }
        },
        Command::PlotScript { run, csv } => {
            let cfg = run.to_config()?;
            let csv = csv
                .or(cfg.out.clone())
                .ok_or(CliError::Config(cli::config::ConfigError::Missing("--csv or out")))?;
            let target = cfg.plot_out.clone().unwrap_or_else(|| csv.with_extension("gp"));
            emit(Some(&target), cli::cmd_plot_script(&csv)?)
        }
        Command::Defaults => emit(None, cli::cmd_defaults()),
    }
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var(cli::THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
