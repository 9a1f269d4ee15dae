//! Parameter bundles shared by pricing, hedging and simulation.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, ensure, Error, Result};

/// Market and model parameters.
///
/// `alpha = 1` is admitted as the limiting case in which the inverse
/// subordinator is the identity clock; it recovers the fractional
/// (and, with `hurst = 0.5`, the Garman-Kohlhagen) model exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Volatility per √year.
    pub sigma: f64,
    /// Domestic risk-free rate per year.
    pub r_d: f64,
    /// Foreign risk-free rate per year.
    pub r_f: f64,
    /// Subordinator index.
    pub alpha: f64,
    /// Hurst exponent.
    pub hurst: f64,
    /// Round-trip proportional transaction cost per unit traded.
    pub k: f64,
    /// Rebalancing interval in years.
    pub dt: f64,
}

impl ModelParams {
    pub fn new(sigma: f64, r_d: f64, r_f: f64, alpha: f64, hurst: f64, k: f64, dt: f64) -> Result<Self> {
        let params = Self {
            sigma,
            r_d,
            r_f,
            alpha,
            hurst,
            k,
            dt,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        ensure(self.sigma > 0.0 && self.sigma.is_finite(), "sigma", || {
            format!("volatility must be finite and > 0, got {}", self.sigma)
        })?;
        ensure(self.r_d.is_finite(), "r_d", || "domestic rate must be finite".into())?;
        ensure(self.r_f.is_finite(), "r_f", || "foreign rate must be finite".into())?;
        ensure(self.alpha > 0.5 && self.alpha <= 1.0, "alpha", || {
            format!("subordinator index must lie in (1/2, 1], got {}", self.alpha)
        })?;
        ensure(self.hurst >= 0.5 && self.hurst < 1.0, "H", || {
            format!("Hurst exponent must lie in [1/2, 1), got {}", self.hurst)
        })?;
        if self.alpha < 1.0 {
            ensure(self.alpha * (2.0 - self.hurst) > 1.0, "2α−αH>1", || {
                format!(
                    "2α−αH>1 violated: alpha={} H={} gives {}",
                    self.alpha,
                    self.hurst,
                    self.alpha * (2.0 - self.hurst)
                )
            })?;
        }
        ensure(self.k >= 0.0 && self.k.is_finite(), "k", || {
            format!("transaction cost rate must be >= 0, got {}", self.k)
        })?;
        ensure(self.dt > 0.0 && self.dt.is_finite(), "dt", || {
            format!("rebalancing interval must be > 0, got {}", self.dt)
        })?;
        Ok(())
    }

    /// Copy with the Garman-Kohlhagen reductions k = 0, α = 1, H = 1/2.
    pub fn garman_kohlhagen(&self) -> Self {
        Self {
            alpha: 1.0,
            hurst: 0.5,
            k: 0.0,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OptionKind {
    Call,
    Put,
}

impl fmt::Display for OptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OptionKind::Call => "call",
            OptionKind::Put => "put",
        })
    }
}

impl FromStr for OptionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "call" | "c" => Ok(OptionKind::Call),
            "put" | "p" => Ok(OptionKind::Put),
            other => Err(domain("kind", format!("expected call or put, got {other:?}"))),
        }
    }
}

/// European option terms. Times are in years on a common calendar; the
/// valuation time `t` must be strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptionContract {
    pub spot: f64,
    pub strike: f64,
    pub t: f64,
    pub maturity: f64,
    pub kind: OptionKind,
}

impl OptionContract {
    pub fn new(spot: f64, strike: f64, t: f64, maturity: f64, kind: OptionKind) -> Result<Self> {
        let contract = Self {
            spot,
            strike,
            t,
            maturity,
            kind,
        };
        contract.validate()?;
        Ok(contract)
    }

    pub fn call(spot: f64, strike: f64, t: f64, maturity: f64) -> Result<Self> {
        Self::new(spot, strike, t, maturity, OptionKind::Call)
    }

    pub fn put(spot: f64, strike: f64, t: f64, maturity: f64) -> Result<Self> {
        Self::new(spot, strike, t, maturity, OptionKind::Put)
    }

    pub fn validate(&self) -> Result<()> {
        ensure(self.spot > 0.0 && self.spot.is_finite(), "S", || {
            format!("spot must be finite and > 0, got {}", self.spot)
        })?;
        ensure(self.strike > 0.0 && self.strike.is_finite(), "K", || {
            format!("strike must be finite and > 0, got {}", self.strike)
        })?;
        ensure(self.t > 0.0 && self.t.is_finite(), "t", || {
            format!("valuation time must be > 0, got {}", self.t)
        })?;
        ensure(self.maturity > self.t && self.maturity.is_finite(), "T", || {
            format!("maturity {} must exceed valuation time {}", self.maturity, self.t)
        })?;
        Ok(())
    }

    /// Time to maturity T − t.
    pub fn tau(&self) -> f64 {
        self.maturity - self.t
    }

    pub fn with_kind(&self, kind: OptionKind) -> Self {
        Self { kind, ..*self }
    }
}
