//! Batch experiment harness: configuration layering, command dispatch and CSV
//! output for the `subfbm` binary.

pub mod commands;
pub mod config;
pub mod error;

use std::fs;
use std::path::{Path, PathBuf};

pub use commands::{execute, Command, CompareSummary, Outcome, Report};
pub use config::{ExperimentConfig, Preset};
pub use error::{CliError, CliResult};

pub const SEED_ENV: &str = "SUBFBM_SEED";

/// Command-line request before configuration is resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub command: Command,
    pub preset: Option<String>,
    pub config_file: Option<PathBuf>,
    /// `key=value` overrides in command-line order.
    pub sets: Vec<String>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

impl Invocation {
    pub fn new(command: Command) -> Self {
        Self { command, preset: None, config_file: None, sets: vec![], out: None, seed: None }
    }
}

/// Layers, lowest precedence first: preset, `env_seed`, config file,
/// `--set` overrides, `--seed`. The preset is chosen by `--preset`, else a
/// `preset` key in the overrides or config file, else the command default.
pub fn resolve_config(inv: &Invocation, env_seed: Option<&str>) -> CliResult<ExperimentConfig> {
    let file_pairs = match &inv.config_file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::invalid(format!("cannot read config {}: {e}", path.display())))?;
            config::parse_pairs(&text, &path.display().to_string())?
        }
        None => vec![],
    };
    let set_pairs = inv
        .sets
        .iter()
        .map(|s| config::parse_assignment(s))
        .collect::<CliResult<Vec<_>>>()?;

    let preset_name = inv
        .preset
        .clone()
        .or_else(|| set_pairs.iter().rev().find(|(k, _)| k == "preset").map(|(_, v)| v.clone()))
        .or_else(|| file_pairs.iter().rev().find(|(k, _)| k == "preset").map(|(_, v)| v.clone()));
    let preset = match preset_name {
        Some(name) => name.parse()?,
        None => inv.command.default_preset(),
    };

    let mut cfg = ExperimentConfig::from_pairs(config::parse_pairs(&preset.text(), preset.name())?);
    if let Some(seed) = env_seed {
        cfg.set("seed", seed.trim());
        cfg.seed().map_err(|e| CliError::invalid(format!("{SEED_ENV}: {e}")))?;
    }
    cfg.extend(file_pairs);
    cfg.extend(set_pairs);
    if let Some(seed) = inv.seed {
        cfg.set("seed", seed.to_string());
    }
    cfg.set("preset", preset.name());
    Ok(cfg)
}

/// `dir/stem_suffix.csv` next to `out`.
pub fn sibling_path(out: &Path, suffix: &str) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}_{suffix}.csv"))
}

/// Resolves, runs and writes one invocation. Tables go to `--out` or stdout;
/// notes go to stderr.
pub fn run(inv: &Invocation, env_seed: Option<&str>) -> CliResult<()> {
    let cfg = resolve_config(inv, env_seed)?;
    let outcome = execute(inv.command, &cfg)?;
    match (outcome.report, &inv.out) {
        (Some(Report::Table(csv)), Some(out)) => fs::write(out, csv)?,
        (Some(Report::Table(csv)), None) => print!("{csv}"),
        (Some(Report::Paths { fbm, subfbm, .. }), Some(out)) => {
            fs::write(sibling_path(out, "fbm"), fbm)?;
            fs::write(sibling_path(out, "subfbm"), subfbm)?;
        }
        (Some(Report::Paths { combined, .. }), None) => print!("{combined}"),
        (None, _) => {}
    }
    for note in outcome.notes {
        eprintln!("{note}");
    }
    Ok(())
}
