//! Closed-form call sensitivities and a central-difference cross-check.

use crate::error::{domain, ensure, Result};
use crate::model::{ModelParams, OptionContract, OptionKind};
use crate::pricing::{effective_timescale, modified_volatility, price, BlackTerms};
use crate::special::{std_normal_cdf, std_normal_pdf};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreeksReport {
    /// ∂C/∂S
    pub delta: f64,
    /// ∂C/∂K
    pub dual_delta: f64,
    /// ∂C/∂r_d
    pub rho_domestic: f64,
    /// ∂C/∂r_f
    pub rho_foreign: f64,
    /// ∂C/∂t at fixed maturity, including the drift of σ̂(t).
    pub theta: f64,
    /// ∂²C/∂S²
    pub gamma: f64,
    /// ∂C/∂σ̂
    pub vega: f64,
}

impl GreeksReport {
    pub const FIELDS: [&'static str; 7] =
        ["delta", "dual_delta", "rho_domestic", "rho_foreign", "theta", "gamma", "vega"];

    pub fn values(&self) -> [f64; 7] {
        [
            self.delta,
            self.dual_delta,
            self.rho_domestic,
            self.rho_foreign,
            self.theta,
            self.gamma,
            self.vega,
        ]
    }
}

/// dσ̂/dt. Only the timescale A(t) = t^(α−1)/Γ(α) depends on t, and
/// dA/dt = (α−1)A/t.
fn modified_volatility_time_derivative(params: &ModelParams, t: f64, sigma_hat: f64) -> Result<f64> {
    let a = effective_timescale(params.alpha, t)?;
    let (h, dt) = (params.hurst, params.dt);
    let c = std::f64::consts::FRAC_2_PI.sqrt() * params.k / params.sigma;
    let d_ratio = (params.alpha - 1.0) / t
        * (2.0 * h * a.powf(2.0 * h) * dt.powf(2.0 * h - 1.0) + h * c * a.powf(h) * dt.powf(h - 1.0));
    Ok(params.sigma * params.sigma * d_ratio / (2.0 * sigma_hat))
}

/// Closed-form Greeks of a European call.
pub fn greeks(contract: &OptionContract, params: &ModelParams) -> Result<GreeksReport> {
    contract.validate()?;
    params.validate()?;
    if contract.kind != OptionKind::Call {
        return Err(domain("kind", "closed-form Greeks are provided for calls only"));
    }
    let vol = modified_volatility(params, contract.t)?;
    let bt = BlackTerms::new(contract, vol, params.r_d, params.r_f)?;
    let (s, k) = (contract.spot, contract.strike);
    let (nd1, nd2, pdf1) = (std_normal_cdf(bt.d1), std_normal_cdf(bt.d2), std_normal_pdf(bt.d1));

    let vega = s * bt.df_for * bt.sqrt_tau * pdf1;
    let dvol_dt = modified_volatility_time_derivative(params, contract.t, vol)?;
    let theta = s * params.r_f * bt.df_for * nd1 - k * params.r_d * bt.df_dom * nd2
        - s * bt.df_for * pdf1 * vol / (2.0 * bt.sqrt_tau)
        + vega * dvol_dt;

    Ok(GreeksReport {
        delta: bt.df_for * nd1,
        dual_delta: -bt.df_dom * nd2,
        rho_domestic: k * bt.tau * bt.df_dom * nd2,
        rho_foreign: -s * bt.tau * bt.df_for * nd1,
        theta,
        gamma: bt.gamma(s, vol),
        vega,
    })
}

/// Absolute bump sizes for [`finite_difference_greeks`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BumpSizes {
    pub spot: f64,
    /// Half-width of the three-point second difference for gamma.
    pub spot_gamma: f64,
    pub strike: f64,
    pub rate: f64,
    pub time: f64,
    pub vol: f64,
}

impl BumpSizes {
    /// 1e-5·max(1, |x|) per coordinate; 1e-4·max(1, S) for gamma.
    pub fn for_point(contract: &OptionContract, params: &ModelParams) -> Result<Self> {
        let vol = modified_volatility(params, contract.t)?;
        let scaled = |x: f64, rel: f64| rel * x.abs().max(1.0);
        Ok(Self {
            spot: scaled(contract.spot, 1e-5),
            spot_gamma: scaled(contract.spot, 1e-4),
            strike: scaled(contract.strike, 1e-5),
            rate: 1e-5 * params.r_d.abs().max(params.r_f.abs()).max(1.0),
            time: scaled(contract.t, 1e-5),
            vol: scaled(vol, 1e-5),
        })
    }

    fn validate(&self) -> Result<()> {
        let all = [self.spot, self.spot_gamma, self.strike, self.rate, self.time, self.vol];
        ensure(all.iter().all(|h| *h > 0.0 && h.is_finite()), "bump", || {
            format!("bump sizes must be finite and > 0, got {self:?}")
        })
    }
}

/// Central-difference Greeks of `price`; theta re-evaluates σ̂ at the bumped
/// valuation time, vega bumps the volatility override.
pub fn finite_difference_greeks(
    contract: &OptionContract,
    params: &ModelParams,
    bumps: &BumpSizes,
) -> Result<GreeksReport> {
    contract.validate()?;
    params.validate()?;
    bumps.validate()?;
    let bumped = |c: OptionContract, p: ModelParams, vol: Option<f64>| -> Result<f64> {
        c.validate()
            .and_then(|_| p.validate())
            .map_err(|e| domain("bump", format!("bumped point is invalid: {e}")))?;
        Ok(price(&c, &p, vol)?.price)
    };
    let central = |up: f64, down: f64, h: f64| (up - down) / (2.0 * h);
    let c = *contract;
    let p = *params;

    let hs = bumps.spot;
    let delta = central(
        bumped(OptionContract { spot: c.spot + hs, ..c }, p, None)?,
        bumped(OptionContract { spot: c.spot - hs, ..c }, p, None)?,
        hs,
    );
    let hg = bumps.spot_gamma;
    let mid = bumped(c, p, None)?;
    let gamma = (bumped(OptionContract { spot: c.spot + hg, ..c }, p, None)? - 2.0 * mid
        + bumped(OptionContract { spot: c.spot - hg, ..c }, p, None)?)
        / (hg * hg);
    let hk = bumps.strike;
    let dual_delta = central(
        bumped(OptionContract { strike: c.strike + hk, ..c }, p, None)?,
        bumped(OptionContract { strike: c.strike - hk, ..c }, p, None)?,
        hk,
    );
    let hr = bumps.rate;
    let rho_domestic = central(
        bumped(c, ModelParams { r_d: p.r_d + hr, ..p }, None)?,
        bumped(c, ModelParams { r_d: p.r_d - hr, ..p }, None)?,
        hr,
    );
    let rho_foreign = central(
        bumped(c, ModelParams { r_f: p.r_f + hr, ..p }, None)?,
        bumped(c, ModelParams { r_f: p.r_f - hr, ..p }, None)?,
        hr,
    );
    let ht = bumps.time;
    let theta = central(
        bumped(OptionContract { t: c.t + ht, ..c }, p, None)?,
        bumped(OptionContract { t: c.t - ht, ..c }, p, None)?,
        ht,
    );
    let vol = modified_volatility(params, contract.t)?;
    let hv = bumps.vol;
    let vega = central(bumped(c, p, Some(vol + hv))?, bumped(c, p, Some(vol - hv))?, hv);

    Ok(GreeksReport {
        delta,
        dual_delta,
        rho_domestic,
        rho_foreign,
        theta,
        gamma,
        vega,
    })
}
