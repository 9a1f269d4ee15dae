//! Shared fixtures and proptest strategies for unit tests.

use proptest::prelude::*;

use crate::model::{ModelParams, OptionContract};

pub fn reference_params() -> ModelParams {
    ModelParams::new(0.1, 0.03, 0.02, 0.9, 0.8, 0.01, 0.01).unwrap()
}

pub fn reference_contract() -> OptionContract {
    OptionContract::call(1.4, 1.5, 0.1, 1.0).unwrap()
}

/// Valid parameters: α ∈ [0.7, 1] and H drawn inside [1/2, 2 − 1/α).
pub fn valid_params() -> impl Strategy<Value = ModelParams> {
    (
        0.7f64..=1.0,
        0.0f64..1.0,
        0.05f64..0.6,
        -0.01f64..0.08,
        -0.01f64..0.08,
        0.0f64..0.03,
        0.001f64..0.1,
    )
        .prop_map(|(alpha, u, sigma, r_d, r_f, k, dt)| {
            let h_max = if alpha < 1.0 { (2.0 - 1.0 / alpha - 1e-6).min(0.95) } else { 0.95 };
            let hurst = 0.5 + u * (h_max - 0.5);
            ModelParams::new(sigma, r_d, r_f, alpha, hurst, k, dt).unwrap()
        })
}

pub fn valid_point() -> impl Strategy<Value = (OptionContract, ModelParams)> {
    (0.5f64..2.0, -0.5f64..0.5, 0.02f64..1.0, 0.05f64..3.0, valid_params()).prop_map(
        |(spot, log_moneyness, t, tau, params)| {
            let contract = OptionContract::call(spot, spot * log_moneyness.exp(), t, t + tau).unwrap();
            (contract, params)
        },
    )
}

/// Like [`valid_point`] but with the strike within two total standard
/// deviations of the spot, so every Greek is well away from underflow.
pub fn near_money_point() -> impl Strategy<Value = (OptionContract, ModelParams)> {
    (0.5f64..2.0, -2.0f64..2.0, 0.02f64..1.0, 0.05f64..3.0, valid_params()).prop_map(
        |(spot, z, t, tau, params)| {
            let vol = crate::pricing::modified_volatility(&params, t).unwrap();
            let strike = spot * (z * vol * tau.sqrt()).exp();
            (OptionContract::call(spot, strike, t, t + tau).unwrap(), params)
        },
    )
}
