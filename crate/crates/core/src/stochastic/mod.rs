//! Samplers for the stable subordinator, its inverse, fractional Brownian
//! motion on arbitrary time sets, the subdiffusive process
//! W(t) = B_H(T_α(t)) and the exchange-rate path, together with closed-form
//! moments of the inverse subordinator used to validate them.
//!
//! Every sampler takes an explicit [`RngStream`] (or a generator derived from
//! one), so identical streams reproduce identical paths bit for bit and Monte
//! Carlo ensembles assign one stream id per path.

mod ensemble;
mod fbm;
mod grid;
mod moments;
mod process;
mod rng;
mod subordinator;

pub use ensemble::{sample_paths, MeanEstimate};
pub use fbm::{simulate_fbm_at_times, FbmSampler};
pub use grid::{TimeGrid, TimeSeriesPath};
pub use moments::{
    expected_delta_t, expected_sq_increment_w, fractional_moment_t_alpha, moment_t_alpha, DeltaTMode,
};
pub use process::{
    sample_step_increment, simulate_clock_and_noise, simulate_exchange_rate, simulate_exchange_rate_with_clock,
    simulate_subdiffusive_fbm, StepIncrement, SubdiffusivePath,
};
pub use rng::{RngStream, CLOCK_LABEL, NOISE_LABEL};
pub use subordinator::{sample_stable_increment, simulate_inverse_subordinator, Clock, SubordinatorConfig};
