//! Rebalancing-interval analysis of the modified volatility.
//!
//! Writing σ̂²/σ² = a·Δt^(2H−1) + b·Δt^(H−1) with a = A^(2H) and
//! b = √(2/π)(k/σ)A^H, the AM-GM inequality bounds the sum by twice the
//! geometric mean of its terms. [`optimal_rebalancing_interval`] is the Δt at
//! which the two terms are equal and [`minimal_volatility`] the corresponding
//! σ̂. The equality point is where the bound is attained, but the bound itself
//! depends on Δt, so for H ≠ 2/3 it is not the minimizer of σ̂;
//! [`stationary_rebalancing_interval`] returns the actual minimizer.

use std::f64::consts::FRAC_2_PI;

use crate::error::{ensure, Error, Result};
use crate::model::{ModelParams, OptionContract};
use crate::pricing::{effective_timescale, modified_volatility, price};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinPriceResult {
    pub dt_star: f64,
    pub sigma_min: f64,
    pub c_min: f64,
}

fn cost_ratio(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    if params.k == 0.0 {
        return Err(Error::Degenerate(
            "k = 0: without transaction costs the volatility is monotone in dt".into(),
        ));
    }
    let ratio = params.k / params.sigma;
    if ratio >= (std::f64::consts::PI / 2.0).sqrt() {
        log::warn!("k/sigma = {ratio} is not below sqrt(pi/2); the optimal interval may exceed typical horizons");
    }
    Ok(ratio)
}

/// Δt* = A(t)^(−1)·(2/π)^(1/(2H))·(k/σ)^(1/H).
pub fn optimal_rebalancing_interval(params: &ModelParams, t: f64) -> Result<f64> {
    let ratio = cost_ratio(params)?;
    let a = effective_timescale(params.alpha, t)?;
    let h = params.hurst;
    Ok(FRAC_2_PI.powf(0.5 / h) * ratio.powf(1.0 / h) / a)
}

/// σ̂_min = √2·σ·A^(1/2)·(2/π)^(1/2 − 1/(4H))·(k/σ)^(1 − 1/(2H)).
pub fn minimal_volatility(params: &ModelParams, t: f64) -> Result<f64> {
    let ratio = cost_ratio(params)?;
    let a = effective_timescale(params.alpha, t)?;
    let h = params.hurst;
    Ok(std::f64::consts::SQRT_2
        * params.sigma
        * a.sqrt()
        * FRAC_2_PI.powf(0.5 - 0.25 / h)
        * ratio.powf(1.0 - 0.5 / h))
}

/// Price with σ̂ = σ̂_min, together with Δt* and σ̂_min.
pub fn minimal_price(contract: &OptionContract, params: &ModelParams) -> Result<MinPriceResult> {
    contract.validate()?;
    let dt_star = optimal_rebalancing_interval(params, contract.t)?;
    let sigma_min = minimal_volatility(params, contract.t)?;
    let c_min = price(contract, params, Some(sigma_min))?.price;
    Ok(MinPriceResult { dt_star, sigma_min, c_min })
}

/// AM-GM lower bound of σ̂²/σ² at the rebalancing interval `params.dt`:
/// 2·A^(3H/2)·Δt^(3H/2 − 1)·(2/π)^(1/4)·(k/σ)^(1/2).
pub fn amgm_lower_bound(params: &ModelParams, t: f64) -> Result<f64> {
    params.validate()?;
    let a = effective_timescale(params.alpha, t)?;
    let e = 1.5 * params.hurst;
    Ok(2.0 * a.powf(e) * params.dt.powf(e - 1.0) * FRAC_2_PI.powf(0.25) * (params.k / params.sigma).sqrt())
}

/// The Δt minimizing σ̂: Δt^H = (1−H)/(2H−1)·√(2/π)(k/σ)·A^(−H).
/// Coincides with [`optimal_rebalancing_interval`] at H = 2/3. At H = 1/2
/// σ̂ decreases in Δt without bound, so there is no minimizer.
pub fn stationary_rebalancing_interval(params: &ModelParams, t: f64) -> Result<f64> {
    let ratio = cost_ratio(params)?;
    let h = params.hurst;
    if h == 0.5 {
        return Err(Error::Degenerate("H = 1/2: the volatility has no interior minimum in dt".into()));
    }
    let a = effective_timescale(params.alpha, t)?;
    Ok(((1.0 - h) / (2.0 * h - 1.0) * FRAC_2_PI.sqrt() * ratio * a.powf(-h)).powf(1.0 / h))
}

/// ∂σ̂/∂H = σ²·ln(AΔt)·[2A^(2H)Δt^(2H−1) + √(2/π)(k/σ)A^HΔt^(H−1)] / (2σ̂).
/// Negative exactly when A·Δt < 1.
pub fn vol_sensitivity_h(params: &ModelParams, t: f64) -> Result<f64> {
    let vol = modified_volatility(params, t)?;
    let a = effective_timescale(params.alpha, t)?;
    let (h, dt) = (params.hurst, params.dt);
    ensure(vol > 0.0, "sigma_hat", || "modified volatility vanished".into())?;
    let bracket = 2.0 * a.powf(2.0 * h) * dt.powf(2.0 * h - 1.0)
        + FRAC_2_PI.sqrt() * (params.k / params.sigma) * a.powf(h) * dt.powf(h - 1.0);
    Ok(params.sigma * params.sigma * (a * dt).ln() * bracket / (2.0 * vol))
}
