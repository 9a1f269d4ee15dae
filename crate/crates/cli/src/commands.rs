//! The experiment commands. Each returns CSV text; writing is left to the caller.

use std::fmt::Write as _;

use clap::ValueEnum;
use subfbm_core::csv_format::format_real;
use subfbm_core::mc_hedging::HedgeStepReport;
use subfbm_core::stochastic::{simulate_exchange_rate_with_clock, Clock};
use subfbm_core::{
    fbm_tc_volatility, finite_difference_greeks, gk_price, greeks, hedge_step_experiment, minimal_price, price,
    BumpSizes, GreeksReport, ModelParams, OptionContract, OptionKind, RngStream, TimeGrid,
};

use crate::config::{ExperimentConfig, Preset};
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Paths,
    Price,
    Greeks,
    Minprice,
    Sweep,
    Compare,
    Hedge,
}

impl Command {
    pub fn default_preset(self) -> Preset {
        match self {
            Command::Paths => Preset::Fig1,
            Command::Compare => Preset::Fig56Out,
            _ => Preset::Fig4,
        }
    }
}

/// CSV produced by a command.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Table(String),
    /// Baseline (α = 1) and subdiffusive paths on a shared grid and seed:
    /// one combined table plus one `t,value` table per model.
    Paths { combined: String, fbm: String, subfbm: String },
}

/// Lines for stderr that accompany a report.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub report: Option<Report>,
    pub notes: Vec<String>,
}

const INPUT_HEADER: &str = "S,K,t,T,kind,sigma,r_d,r_f,alpha,H,k,dt";

fn input_fields(c: &OptionContract, p: &ModelParams) -> String {
    let reals = |xs: &[f64]| xs.iter().map(|x| format_real(*x)).collect::<Vec<_>>().join(",");
    format!(
        "{},{},{}",
        reals(&[c.spot, c.strike, c.t, c.maturity]),
        c.kind,
        reals(&[p.sigma, p.r_d, p.r_f, p.alpha, p.hurst, p.k, p.dt])
    )
}

fn row(fields: &[f64]) -> String {
    fields.iter().map(|x| format_real(*x)).collect::<Vec<_>>().join(",")
}

pub fn execute(command: Command, cfg: &ExperimentConfig) -> CliResult<Outcome> {
    let table = |s: String| Outcome { report: Some(Report::Table(s)), notes: vec![] };
    match command {
        Command::Paths => cmd_paths(cfg),
        Command::Price => cmd_price(cfg).map(table),
        Command::Greeks => cmd_greeks(cfg).map(table),
        Command::Minprice => cmd_minprice(cfg).map(table),
        Command::Sweep => cmd_sweep(cfg).map(table),
        Command::Compare => {
            let (csv, summary) = cmd_compare(cfg)?;
            Ok(Outcome { report: Some(Report::Table(csv)), notes: vec![summary.to_string()] })
        }
        Command::Hedge => cmd_hedge(cfg).map(table),
    }
}

pub fn cmd_price(cfg: &ExperimentConfig) -> CliResult<String> {
    let (c, p) = (cfg.contract()?, cfg.model_params()?);
    let q = price(&c, &p, None)?;
    Ok(format!(
        "{INPUT_HEADER},price,sigma_hat,d1,d2\n{},{}\n",
        input_fields(&c, &p),
        row(&[q.price, q.sigma_hat, q.d1, q.d2])
    ))
}

fn greeks_row(g: &GreeksReport) -> String {
    row(&g.values())
}

/// Closed-form Greeks; with `fd = 1` an extra row of central differences.
pub fn cmd_greeks(cfg: &ExperimentConfig) -> CliResult<String> {
    let (c, p) = (cfg.contract()?, cfg.model_params()?);
    let g = greeks(&c, &p)?;
    let mut out = format!("{INPUT_HEADER},method,{}\n", GreeksReport::FIELDS.join(","));
    writeln!(out, "{},closed_form,{}", input_fields(&c, &p), greeks_row(&g)).unwrap();
    let fd = finite_difference_greeks(&c, &p, &BumpSizes::for_point(&c, &p)?)?;
    writeln!(out, "{},finite_difference,{}", input_fields(&c, &p), greeks_row(&fd)).unwrap();
    Ok(out)
}

pub fn cmd_minprice(cfg: &ExperimentConfig) -> CliResult<String> {
    let (c, p) = (cfg.contract()?, cfg.model_params()?);
    let r = minimal_price(&c, &p)?;
    Ok(format!(
        "{INPUT_HEADER},dt_star,sigma_min,c_min\n{},{}\n",
        input_fields(&c, &p),
        row(&[r.dt_star, r.sigma_min, r.c_min])
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVar {
    Hurst,
    Alpha,
    Cost,
    Interval,
    Strike,
    Maturity,
}

impl SweepVar {
    pub fn parse(s: &str) -> CliResult<Self> {
        Ok(match s {
            "H" => SweepVar::Hurst,
            "alpha" => SweepVar::Alpha,
            "k" => SweepVar::Cost,
            "dt" => SweepVar::Interval,
            "K" => SweepVar::Strike,
            "T" => SweepVar::Maturity,
            other => {
                return Err(CliError::invalid(format!(
                    "invalid var: {other:?} is not one of H, alpha, k, dt, K, T"
                )))
            }
        })
    }

    pub fn key(self) -> &'static str {
        match self {
            SweepVar::Hurst => "H",
            SweepVar::Alpha => "alpha",
            SweepVar::Cost => "k",
            SweepVar::Interval => "dt",
            SweepVar::Strike => "K",
            SweepVar::Maturity => "T",
        }
    }

    /// Range used when `from`/`to` are not configured. The H and α ranges
    /// stay inside α(2 − H) > 1 at the fig4 defaults.
    pub fn default_range(self) -> (f64, f64) {
        match self {
            SweepVar::Hurst => (0.55, 0.88),
            SweepVar::Alpha => (0.84, 1.0),
            SweepVar::Cost => (0.0, 0.05),
            SweepVar::Interval => (0.001, 0.1),
            SweepVar::Strike => (1.2, 1.6),
            SweepVar::Maturity => (0.2, 2.0),
        }
    }
}

/// `n` evenly spaced points from `lo` to `hi` inclusive; the last point is
/// exactly `hi`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n)
            .map(|i| if i == n - 1 { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

/// Price along one parameter with all others fixed.
pub fn cmd_sweep(cfg: &ExperimentConfig) -> CliResult<String> {
    let var = SweepVar::parse(cfg.raw("var").unwrap_or("k"))?;
    let (lo, hi) = var.default_range();
    let (lo, hi) = (cfg.real_or("from", lo)?, cfg.real_or("to", hi)?);
    let points = cfg.count_or("points", 50)?;
    if points == 0 {
        return Err(CliError::invalid("invalid points: must be >= 1"));
    }
    if lo > hi {
        return Err(CliError::invalid(format!("invalid range: from {lo} exceeds to {hi}")));
    }
    let mut out = format!("{},price,sigma_hat,d1,d2\n", var.key());
    for x in linspace(lo, hi, points) {
        let mut point = cfg.clone();
        point.set(var.key(), format_real(x));
        let (c, p) = (point.contract()?, point.model_params()?);
        let q = price(&c, &p, None)?;
        writeln!(out, "{}", row(&[x, q.price, q.sigma_hat, q.d1, q.d2])).unwrap();
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompareSummary {
    /// Grid points where |subfbm − gk| ≤ |fbm − gk|.
    pub better: usize,
    pub total: usize,
}

impl CompareSummary {
    pub fn fraction(&self) -> f64 {
        self.better as f64 / self.total as f64
    }

    pub fn majority(&self) -> bool {
        2 * self.better > self.total
    }
}

impl std::fmt::Display for CompareSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "subfbm closer to gk than fbm at {}/{} grid points (fraction {:.4}, majority: {})",
            self.better,
            self.total,
            self.fraction(),
            if self.majority() { "yes" } else { "no" }
        )
    }
}

fn intrinsic(c: &OptionContract) -> f64 {
    match c.kind {
        OptionKind::Call => (c.spot - c.strike).max(0.0),
        OptionKind::Put => (c.strike - c.spot).max(0.0),
    }
}

/// Garman-Kohlhagen, fractional and subdiffusive fractional prices over a
/// maturity × strike grid. Maturities at the valuation time are reported at
/// intrinsic value.
pub fn cmd_compare(cfg: &ExperimentConfig) -> CliResult<(String, CompareSummary)> {
    let p = cfg.model_params()?;
    let (spot, t, kind) = (cfg.real("S")?, cfg.real("t")?, cfg.kind()?);
    let maturities = linspace(cfg.real("T_min")?, cfg.real("T_max")?, cfg.count_or("T_points", 20)?);
    let strikes = linspace(cfg.real("K_min")?, cfg.real("K_max")?, cfg.count_or("K_points", 20)?);
    if maturities.is_empty() || strikes.is_empty() {
        return Err(CliError::invalid("invalid grid: T_points and K_points must be >= 1"));
    }
    let fbm_vol = fbm_tc_volatility(p.sigma, p.hurst, p.k, p.dt)?;
    let mut out = String::from("T,K,gk_price,fbm_price,subfbm_price,fbm_minus_gk,subfbm_minus_gk\n");
    let mut summary = CompareSummary { better: 0, total: 0 };
    for &maturity in &maturities {
        if maturity < t {
            return Err(CliError::invalid(format!("invalid T: maturity {maturity} precedes valuation time {t}")));
        }
        for &strike in &strikes {
            let (gk, fbm, sub) = if maturity == t {
                let c = OptionContract { spot, strike, t, maturity, kind };
                OptionContract::new(spot, strike, t, t + 1.0, kind)?;
                let v = intrinsic(&c);
                (v, v, v)
            } else {
                let c = OptionContract::new(spot, strike, t, maturity, kind)?;
                (
                    gk_price(&c, p.sigma, p.r_d, p.r_f)?.price,
                    price(&c, &p, Some(fbm_vol))?.price,
                    price(&c, &p, None)?.price,
                )
            };
            summary.total += 1;
            if (sub - gk).abs() <= (fbm - gk).abs() {
                summary.better += 1;
            }
            writeln!(out, "{}", row(&[maturity, strike, gk, fbm, sub, fbm - gk, sub - gk])).unwrap();
        }
    }
    Ok((out, summary))
}

pub fn cmd_hedge(cfg: &ExperimentConfig) -> CliResult<String> {
    let (c, p) = (cfg.contract()?, cfg.model_params()?);
    let n_paths = cfg.count_or("n_paths", 100_000)?;
    let r = hedge_step_experiment(&c, &p, n_paths, &RngStream::new(cfg.seed()?, 0))?;
    Ok(format!("{}\n{}\n", HedgeStepReport::CSV_HEADER, r.to_csv_row()))
}

pub fn cmd_paths(cfg: &ExperimentConfig) -> CliResult<Outcome> {
    let p = cfg.model_params()?;
    let s0 = cfg.real("S")?;
    let grid = TimeGrid::uniform(cfg.real("horizon")?, cfg.count("n_steps")?)?;
    let stream = RngStream::new(cfg.seed()?, 0);
    let baseline = ModelParams { alpha: 1.0, ..p };
    let (fbm, _) = simulate_exchange_rate_with_clock(&baseline, s0, &Clock::Identity, &grid, &stream)?;
    let clock = Clock::for_alpha(p.alpha, &grid)?;
    let (sub, path) = simulate_exchange_rate_with_clock(&p, s0, &clock, &grid, &stream)?;

    let mut combined = String::from("t,fbm,subfbm\n");
    for ((t, a), b) in grid.times().iter().zip(&fbm.values).zip(&sub.values) {
        writeln!(combined, "{}", row(&[*t, *a, *b])).unwrap();
    }
    let flats = path.clock.flat_steps();
    Ok(Outcome {
        report: Some(Report::Paths { combined, fbm: fbm.to_csv(), subfbm: sub.to_csv() }),
        notes: vec![format!("subdiffusive clock constant on {flats} of {} steps", grid.len().saturating_sub(1))],
    })
}
