//! European currency option pricing when the spot exchange rate follows a
//! subdiffusive fractional Brownian motion, with proportional transaction
//! costs and discrete rebalancing.
//!
//! The crate is organised bottom-up:
//!
//! * [`special`]: Gamma, normal distribution and Mittag-Leffler functions.
//! * [`stochastic`]: samplers for the stable subordinator, its inverse,
//!   fractional Brownian motion and the exchange-rate process, plus closed-form
//!   moments used to validate them.
//! * [`model`]: parameter bundles shared by the pricing layers.
//! * [`pricing`]: modified volatility and the closed-form call/put prices.
//! * [`greeks`]: closed-form sensitivities and a finite-difference harness.
//! * [`hedging`]: optimal rebalancing interval, minimal volatility and price.
//! * [`mc_hedging`]: Monte Carlo check of the one-step mean self-financing
//!   delta hedge.

pub mod csv_format;
pub mod error;
pub mod greeks;
pub mod hedging;
pub mod mc_hedging;
pub mod model;
pub mod pricing;
pub mod special;
pub mod stochastic;

pub use error::{Error, Result};
pub use greeks::{finite_difference_greeks, greeks, BumpSizes, GreeksReport};
pub use hedging::{
    minimal_price, minimal_volatility, optimal_rebalancing_interval,
    stationary_rebalancing_interval, vol_sensitivity_h, MinPriceResult,
};
pub use mc_hedging::{hedge_step_experiment, HedgeStepReport};
pub use model::{ModelParams, OptionContract, OptionKind};
pub use pricing::{
    effective_timescale, fbm_tc_volatility, gk_price, modified_volatility, fbm_volatility,
    price, PriceQuote,
};
pub use stochastic::{RngStream, SubordinatorConfig, TimeGrid, TimeSeriesPath};

#[cfg(test)]
pub(crate) mod test_support;
