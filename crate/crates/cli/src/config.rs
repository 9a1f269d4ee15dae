//! Flat `key = value` experiment configuration with named presets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use subfbm_core::{ModelParams, OptionContract, OptionKind};

use crate::error::{CliError, CliResult};

pub const DEFAULT_SEED: u64 = 20_240_501;

/// Every key a configuration may set.
pub const KNOWN_KEYS: &[&str] = &[
    "preset", "seed", "S", "K", "t", "T", "kind", "sigma", "r_d", "r_f", "alpha", "H", "k", "dt",
    "horizon", "n_steps", "n_paths", "var", "from", "to", "points", "T_min", "T_max", "T_points",
    "K_min", "K_max", "K_points",
];

const FIG1: &str = "
sigma = 0.1
r_d = 0.03
r_f = 0.02
alpha = 0.9
H = 0.8
S = 1
k = 0
dt = 0.01
horizon = 1
n_steps = 500
";

const FIG4: &str = "
S = 1.4
K = 1.5
kind = call
sigma = 0.1
r_d = 0.03
r_f = 0.02
T = 1
t = 0.1
dt = 0.01
k = 0.01
H = 0.8
alpha = 0.9
n_paths = 100000
var = k
points = 50
";

const FIG56: &str = "
S = 1.2
kind = call
sigma = 0.5
r_d = 0.05
r_f = 0.01
t = 0.1
dt = 0.01
k = 0.001
H = 0.8
alpha = 0.9
T_min = 0.1
T_max = 2
T_points = 20
K_points = 20
";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig1,
    Fig4,
    Fig56In,
    Fig56Out,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Fig1, Preset::Fig4, Preset::Fig56In, Preset::Fig56Out];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig4 => "fig4",
            Preset::Fig56In => "fig56-in",
            Preset::Fig56Out => "fig56-out",
        }
    }

    pub fn text(self) -> String {
        match self {
            Preset::Fig1 => FIG1.to_string(),
            Preset::Fig4 => FIG4.to_string(),
            Preset::Fig56In => format!("{FIG56}K_min = 0.8\nK_max = 1.19\n"),
            Preset::Fig56Out => format!("{FIG56}K_min = 1.21\nK_max = 1.4\n"),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
                CliError::invalid(format!("unknown preset {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// Parses `key = value` lines; `#` starts a comment. Later keys win.
pub fn parse_pairs(text: &str, origin: &str) -> CliResult<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_assignment(line).map_err(|e| CliError::invalid(format!("{origin}:{}: {e}", lineno + 1)))?);
    }
    Ok(out)
}

/// Parses a single `key=value` assignment.
pub fn parse_assignment(text: &str) -> CliResult<(String, String)> {
    let (key, value) = text
        .split_once('=')
        .ok_or_else(|| CliError::invalid(format!("expected key=value, got {text:?}")))?;
    let (key, value) = (key.trim(), value.trim());
    if !KNOWN_KEYS.contains(&key) {
        return Err(CliError::invalid(format!("unknown key {key:?}")));
    }
    if value.is_empty() {
        return Err(CliError::invalid(format!("empty value for {key:?}")));
    }
    Ok((key.to_string(), value.to_string()))
}

/// Resolved configuration: a flat map of validated keys.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExperimentConfig {
    values: BTreeMap<String, String>,
}

impl ExperimentConfig {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, String)>) -> Self {
        let mut cfg = Self::default();
        cfg.extend(pairs);
        cfg
    }

    pub fn extend(&mut self, pairs: impl IntoIterator<Item = (String, String)>) {
        self.values.extend(pairs);
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        self.values.insert(key.to_string(), value.into());
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn require(&self, key: &str) -> CliResult<&str> {
        self.raw(key).ok_or_else(|| CliError::invalid(format!("missing required key {key:?}")))
    }

    pub fn real(&self, key: &str) -> CliResult<f64> {
        let raw = self.require(key)?;
        let v: f64 = raw
            .parse()
            .map_err(|_| CliError::invalid(format!("invalid {key}: {raw:?} is not a number")))?;
        if !v.is_finite() {
            return Err(CliError::invalid(format!("invalid {key}: must be finite, got {raw}")));
        }
        Ok(v)
    }

    pub fn real_or(&self, key: &str, default: f64) -> CliResult<f64> {
        if self.raw(key).is_some() {
            self.real(key)
        } else {
            Ok(default)
        }
    }

    pub fn count(&self, key: &str) -> CliResult<usize> {
        let raw = self.require(key)?;
        raw.parse()
            .map_err(|_| CliError::invalid(format!("invalid {key}: {raw:?} is not a nonnegative integer")))
    }

    pub fn count_or(&self, key: &str, default: usize) -> CliResult<usize> {
        if self.raw(key).is_some() {
            self.count(key)
        } else {
            Ok(default)
        }
    }

    pub fn seed(&self) -> CliResult<u64> {
        match self.raw("seed") {
            None => Ok(DEFAULT_SEED),
            Some(raw) => raw
                .parse()
                .map_err(|_| CliError::invalid(format!("invalid seed: {raw:?} is not a 64-bit unsigned integer"))),
        }
    }

    pub fn kind(&self) -> CliResult<OptionKind> {
        Ok(self.raw("kind").unwrap_or("call").parse::<OptionKind>()?)
    }

    pub fn model_params(&self) -> CliResult<ModelParams> {
        Ok(ModelParams::new(
            self.real("sigma")?,
            self.real("r_d")?,
            self.real("r_f")?,
            self.real("alpha")?,
            self.real("H")?,
            self.real("k")?,
            self.real("dt")?,
        )?)
    }

    pub fn contract(&self) -> CliResult<OptionContract> {
        Ok(OptionContract::new(
            self.real("S")?,
            self.real("K")?,
            self.real("t")?,
            self.real("T")?,
            self.kind()?,
        )?)
    }
}
