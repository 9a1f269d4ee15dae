//! Shared fixtures for the benchmarks.

use subfbm_core::{ModelParams, OptionContract, TimeGrid};

/// Call struck slightly out of the money, valued at t = 0.1 with one year to run.
pub fn reference_call() -> OptionContract {
    OptionContract::call(1.4, 1.5, 0.1, 1.0).expect("valid contract")
}

/// σ = 0.1, r_d = 0.03, r_f = 0.02, α = 0.9, H = 0.8, k = 0.01, Δt = 0.01.
pub fn reference_params() -> ModelParams {
    ModelParams::new(0.1, 0.03, 0.02, 0.9, 0.8, 0.01, 0.01).expect("valid params")
}

/// `n` equal steps on [0, 1].
pub fn unit_grid(n: usize) -> TimeGrid {
    TimeGrid::uniform(1.0, n).expect("valid grid")
}
