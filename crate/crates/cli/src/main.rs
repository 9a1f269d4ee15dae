use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use subfbm_cli::{run, Command, Invocation, SEED_ENV};

/// Currency option pricing experiments under subdiffusive fractional Brownian
/// motion with transaction costs. Results are written as CSV.
#[derive(Debug, Parser)]
#[command(name = "subfbm", version)]
struct Args {
    command: Command,
    /// Named parameter set: fig1, fig4, fig56-in, fig56-out.
    #[arg(long)]
    preset: Option<String>,
    /// Flat key=value configuration file.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Override one configuration key; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    sets: Vec<String>,
    /// Output file (paths writes FILE-derived _fbm.csv and _subfbm.csv).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Random seed; overrides the SUBFBM_SEED environment variable.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = Args::parse();
    let inv = Invocation {
        command: args.command,
        preset: args.preset,
        config_file: args.config,
        sets: args.sets,
        out: args.out,
        seed: args.seed,
    };
    let env_seed = std::env::var(SEED_ENV).ok();
    match run(&inv, env_seed.as_deref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
