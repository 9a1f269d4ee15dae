//! Modified volatility and closed-form European currency option prices.
//!
//! All four models compared in the experiments (Garman-Kohlhagen, fractional
//! Black-Scholes, fractional with transaction costs, subdiffusive fractional
//! with transaction costs) share the same price formula and differ only in
//! the volatility plugged into it, so [`price`] takes an optional override.

use std::f64::consts::FRAC_2_PI;

use crate::error::{ensure, Error, Result};
use crate::model::{ModelParams, OptionContract, OptionKind};
use crate::special::{gamma, std_normal_cdf, std_normal_pdf};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriceQuote {
    pub price: f64,
    /// Volatility actually used (modified volatility or the override).
    pub sigma_hat: f64,
    pub d1: f64,
    pub d2: f64,
}

/// A(t) = t^(α−1) / Γ(α), the mean rate of the inverse-subordinator clock.
/// Exactly 1 when α = 1.
pub fn effective_timescale(alpha: f64, t: f64) -> Result<f64> {
    ensure(t > 0.0 && t.is_finite(), "t", || {
        format!("effective timescale needs t > 0 (it diverges at 0 for alpha < 1), got {t}")
    })?;
    ensure(alpha > 0.0 && alpha <= 1.0, "alpha", || {
        format!("subordinator index must lie in (0, 1], got {alpha}")
    })?;
    if alpha == 1.0 {
        return Ok(1.0);
    }
    Ok(t.powf(alpha - 1.0) / gamma(alpha)?)
}

/// σ̂²/σ² = A^(2H) Δt^(2H−1) + √(2/π) (k/σ) A^H Δt^(H−1).
pub(crate) fn variance_ratio(sigma: f64, hurst: f64, k: f64, dt: f64, timescale: f64) -> f64 {
    timescale.powf(2.0 * hurst) * dt.powf(2.0 * hurst - 1.0)
        + FRAC_2_PI.sqrt() * (k / sigma) * timescale.powf(hurst) * dt.powf(hurst - 1.0)
}

fn volatility_from_timescale(sigma: f64, hurst: f64, k: f64, dt: f64, timescale: f64) -> f64 {
    sigma * variance_ratio(sigma, hurst, k, dt, timescale).sqrt()
}

/// Effective volatility σ̂ at valuation time `t`, absorbing discrete
/// rebalancing every `dt`, long-range dependence and transaction costs.
pub fn modified_volatility(params: &ModelParams, t: f64) -> Result<f64> {
    params.validate()?;
    let a = effective_timescale(params.alpha, t)?;
    Ok(volatility_from_timescale(params.sigma, params.hurst, params.k, params.dt, a))
}

fn check_fbm_inputs(sigma: f64, hurst: f64, dt: f64) -> Result<()> {
    ensure(sigma > 0.0 && sigma.is_finite(), "sigma", || format!("must be > 0, got {sigma}"))?;
    ensure((0.5..1.0).contains(&hurst), "H", || format!("must lie in [1/2, 1), got {hurst}"))?;
    ensure(dt > 0.0 && dt.is_finite(), "dt", || format!("must be > 0, got {dt}"))
}

/// Fractional Black-Scholes volatility without costs: σ Δt^(H−1/2).
pub fn fbm_volatility(sigma: f64, hurst: f64, dt: f64) -> Result<f64> {
    check_fbm_inputs(sigma, hurst, dt)?;
    Ok(sigma * dt.powf(hurst - 0.5))
}

/// Fractional volatility with transaction costs; identical to
/// [`modified_volatility`] at α = 1.
pub fn fbm_tc_volatility(sigma: f64, hurst: f64, k: f64, dt: f64) -> Result<f64> {
    check_fbm_inputs(sigma, hurst, dt)?;
    ensure(k >= 0.0 && k.is_finite(), "k", || format!("must be >= 0, got {k}"))?;
    Ok(volatility_from_timescale(sigma, hurst, k, dt, 1.0))
}

/// Intermediate quantities of the closed form for a given volatility.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BlackTerms {
    pub d1: f64,
    pub d2: f64,
    pub tau: f64,
    pub sqrt_tau: f64,
    /// e^(−r_d τ)
    pub df_dom: f64,
    /// e^(−r_f τ)
    pub df_for: f64,
}

impl BlackTerms {
    pub fn new(contract: &OptionContract, vol: f64, r_d: f64, r_f: f64) -> Result<Self> {
        let tau = contract.tau();
        let sqrt_tau = tau.sqrt();
        let sd = vol * sqrt_tau;
        if !(sd > 0.0 && sd.is_finite()) {
            return Err(Error::Degenerate(format!(
                "total volatility sigma_hat*sqrt(T-t) = {sd} is not positive"
            )));
        }
        let d1 = ((contract.spot / contract.strike).ln() + (r_d - r_f) * tau + 0.5 * vol * vol * tau) / sd;
        Ok(Self {
            d1,
            d2: d1 - sd,
            tau,
            sqrt_tau,
            df_dom: (-r_d * tau).exp(),
            df_for: (-r_f * tau).exp(),
        })
    }

    pub fn value(&self, contract: &OptionContract) -> f64 {
        let (s, k) = (contract.spot, contract.strike);
        let v = match contract.kind {
            OptionKind::Call => s * self.df_for * std_normal_cdf(self.d1) - k * self.df_dom * std_normal_cdf(self.d2),
            OptionKind::Put => k * self.df_dom * std_normal_cdf(-self.d2) - s * self.df_for * std_normal_cdf(-self.d1),
        };
        v.max(0.0)
    }

    /// ∂V/∂S for the contract's kind.
    pub fn delta(&self, kind: OptionKind) -> f64 {
        match kind {
            OptionKind::Call => self.df_for * std_normal_cdf(self.d1),
            OptionKind::Put => -self.df_for * std_normal_cdf(-self.d1),
        }
    }

    /// ∂²V/∂S², the same for calls and puts.
    pub fn gamma(&self, spot: f64, vol: f64) -> f64 {
        self.df_for * std_normal_pdf(self.d1) / (spot * vol * self.sqrt_tau)
    }
}

fn quote(contract: &OptionContract, vol: f64, r_d: f64, r_f: f64) -> Result<PriceQuote> {
    let terms = BlackTerms::new(contract, vol, r_d, r_f)?;
    Ok(PriceQuote {
        price: terms.value(contract),
        sigma_hat: vol,
        d1: terms.d1,
        d2: terms.d2,
    })
}

/// Closed-form price of a European currency call or put. The volatility is
/// the modified volatility at the contract's valuation time unless
/// `vol_override` is given.
pub fn price(contract: &OptionContract, params: &ModelParams, vol_override: Option<f64>) -> Result<PriceQuote> {
    contract.validate()?;
    params.validate()?;
    let vol = match vol_override {
        Some(v) => {
            ensure(v > 0.0 && v.is_finite(), "vol_override", || format!("must be > 0, got {v}"))?;
            v
        }
        None => modified_volatility(params, contract.t)?,
    };
    quote(contract, vol, params.r_d, params.r_f)
}

/// Garman-Kohlhagen price: the same closed form with σ̂ = σ.
pub fn gk_price(contract: &OptionContract, sigma: f64, r_d: f64, r_f: f64) -> Result<PriceQuote> {
    contract.validate()?;
    ensure(sigma > 0.0 && sigma.is_finite(), "sigma", || format!("must be > 0, got {sigma}"))?;
    ensure(r_d.is_finite() && r_f.is_finite(), "rates", || "rates must be finite".into())?;
    quote(contract, sigma, r_d, r_f)
}
