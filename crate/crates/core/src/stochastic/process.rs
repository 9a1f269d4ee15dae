use super::fbm::simulate_fbm_at_times;
use super::grid::{TimeGrid, TimeSeriesPath};
use super::rng::{RngStream, CLOCK_LABEL, NOISE_LABEL};
use super::subordinator::{Clock, SubordinatorConfig};
use crate::error::{ensure, Result};
use crate::model::ModelParams;

/// A realization of the clock T_α and the subdiffusive noise W = B_H(T_α)
/// on a common grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SubdiffusivePath {
    pub clock: TimeSeriesPath,
    pub noise: TimeSeriesPath,
}

/// Samples the clock from the `CLOCK_LABEL` child of `stream` and the
/// fractional noise from the independent `NOISE_LABEL` child.
pub fn simulate_clock_and_noise(
    clock: &Clock,
    hurst: f64,
    grid: &TimeGrid,
    stream: &RngStream,
) -> Result<SubdiffusivePath> {
    let clock_values = clock.sample(grid.times(), &mut stream.child(CLOCK_LABEL).generator())?;
    let noise_values = simulate_fbm_at_times(hurst, &clock_values, &mut stream.child(NOISE_LABEL).generator())?;
    Ok(SubdiffusivePath {
        clock: TimeSeriesPath::new(grid.clone(), clock_values)?,
        noise: TimeSeriesPath::new(grid.clone(), noise_values)?,
    })
}

/// W_{α,H}(t) = B_H(T_α(t)) on `grid`.
pub fn simulate_subdiffusive_fbm(
    cfg: &SubordinatorConfig,
    hurst: f64,
    grid: &TimeGrid,
    stream: &RngStream,
) -> Result<TimeSeriesPath> {
    Ok(simulate_clock_and_noise(&Clock::InverseStable(*cfg), hurst, grid, stream)?.noise)
}

/// S_t = S0·exp((r_d − r_f)·T_α(t) + σ·W_{α,H}(t)) with the default clock for
/// `params.alpha`.
pub fn simulate_exchange_rate(
    params: &ModelParams,
    s0: f64,
    grid: &TimeGrid,
    stream: &RngStream,
) -> Result<TimeSeriesPath> {
    let clock = Clock::for_alpha(params.alpha, grid)?;
    Ok(simulate_exchange_rate_with_clock(params, s0, &clock, grid, stream)?.0)
}

/// Exchange-rate path together with the clock and noise that drive it.
pub fn simulate_exchange_rate_with_clock(
    params: &ModelParams,
    s0: f64,
    clock: &Clock,
    grid: &TimeGrid,
    stream: &RngStream,
) -> Result<(TimeSeriesPath, SubdiffusivePath)> {
    params.validate()?;
    ensure(s0 > 0.0 && s0.is_finite(), "S0", || format!("initial rate must be > 0, got {s0}"))?;
    let path = simulate_clock_and_noise(clock, params.hurst, grid, stream)?;
    let drift = params.r_d - params.r_f;
    let values = path
        .clock
        .values
        .iter()
        .zip(&path.noise.values)
        .map(|(t, w)| s0 * (drift * t + params.sigma * w).exp())
        .collect();
    Ok((TimeSeriesPath::new(grid.clone(), values)?, path))
}

/// Increments of the clock and of the noise over [t, t + dt].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepIncrement {
    pub d_clock: f64,
    pub dw: f64,
}

/// One draw of (ΔT_α, ΔW) over [t, t + dt], sharing the clock realization.
pub fn sample_step_increment(
    clock: &Clock,
    hurst: f64,
    t: f64,
    dt: f64,
    stream: &RngStream,
) -> Result<StepIncrement> {
    ensure(t >= 0.0 && t.is_finite(), "t", || format!("must be >= 0, got {t}"))?;
    ensure(dt > 0.0 && dt.is_finite(), "dt", || format!("must be > 0, got {dt}"))?;
    let clock_values = clock.sample(&[t, t + dt], &mut stream.child(CLOCK_LABEL).generator())?;
    let w = simulate_fbm_at_times(hurst, &clock_values, &mut stream.child(NOISE_LABEL).generator())?;
    Ok(StepIncrement {
        d_clock: clock_values[1] - clock_values[0],
        dw: w[1] - w[0],
    })
}
