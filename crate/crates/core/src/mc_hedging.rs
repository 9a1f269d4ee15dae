//! Monte Carlo check of the one-step mean self-financing delta hedge.
//!
//! At valuation time t the writer holds U = ∂C/∂S units of foreign currency
//! and F = C − U·S in domestic bonds. Over one rebalancing interval Δt the
//! hedge earns
//!
//! ΔΠ = U·(S' − S + r_f·S·Δt) + r_d·F·Δt − (k/2)·|ΔU|·S'
//!
//! and the option value changes by ΔC = C(t+Δt, S') − C(t, S). Pricing with
//! the modified volatility should make E[ΔΠ − ΔC] vanish up to the error of
//! replacing E[(ΔT)^p] by (A·Δt)^p in the volatility, which the report
//! evaluates from the sampled clock increments.

use std::f64::consts::FRAC_2_PI;

use crate::csv_format::format_real;
use crate::error::{ensure, Result};
use crate::model::{ModelParams, OptionContract};
use crate::pricing::{effective_timescale, modified_volatility, BlackTerms};
use crate::stochastic::{
    sample_paths, sample_step_increment, Clock, MeanEstimate, RngStream, StepIncrement, TimeGrid,
};

pub const MIN_HEDGE_PATHS: usize = 10_000;

/// Replicating position at a rebalancing time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HedgePortfolio {
    pub stock_units: f64,
    pub bond_value: f64,
    pub portfolio_value: f64,
}

impl HedgePortfolio {
    /// Holds `delta` units of the foreign currency and finances the rest of
    /// `option_value` in domestic bonds.
    pub fn replicating(option_value: f64, delta: f64, spot: f64) -> Self {
        Self {
            stock_units: delta,
            bond_value: option_value - delta * spot,
            portfolio_value: option_value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssetIncrement {
    /// S·(e^((r_d−r_f)ΔT + σΔW) − 1)
    pub exact: f64,
    /// (r_d−r_f)·S·ΔT + σ·S·ΔW + ½σ²·S·ΔW²
    pub expansion: f64,
}

pub fn asset_increment(spot: f64, params: &ModelParams, d_clock: f64, dw: f64) -> Result<AssetIncrement> {
    ensure(spot > 0.0 && spot.is_finite(), "S", || format!("spot must be > 0, got {spot}"))?;
    ensure(d_clock >= 0.0 && d_clock.is_finite(), "dT", || format!("clock increment must be >= 0, got {d_clock}"))?;
    ensure(dw.is_finite(), "dW", || "noise increment must be finite".into())?;
    let mu = params.r_d - params.r_f;
    let s = params.sigma;
    Ok(AssetIncrement {
        exact: spot * (mu * d_clock + s * dw).exp_m1(),
        expansion: mu * spot * d_clock + s * spot * dw + 0.5 * s * s * spot * dw * dw,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HedgeStepReport {
    pub n_paths: usize,
    /// Sample mean of ΔΠ − ΔC.
    pub mean_discrepancy: f64,
    pub std_error: f64,
    /// Sample mean of (k/2)·|ΔU|·S'.
    pub mean_transaction_cost: f64,
    /// Expected ΔΠ − ΔC from the second-order expansion with the sampled
    /// moments E[(ΔT)^2H], E[(ΔT)^H] in place of (A·Δt)^2H, (A·Δt)^H.
    pub theoretical_residual: f64,
    /// Same expression with absolute values on each moment gap.
    pub residual_bound: f64,
    /// Sample mean of (ΔT)^2H.
    pub mean_clock_pow_2h: f64,
    /// Sample mean of (ΔT)^H.
    pub mean_clock_pow_h: f64,
    pub seed: u64,
}

impl HedgeStepReport {
    pub const CSV_HEADER: &'static str = "n_paths,mean_discrepancy,std_error,mean_tc,residual_bound,seed";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n_paths,
            format_real(self.mean_discrepancy),
            format_real(self.std_error),
            format_real(self.mean_transaction_cost),
            format_real(self.residual_bound),
            self.seed
        )
    }

    /// |mean| ≤ max(z·SE, residual_bound).
    pub fn within_tolerance(&self, z: f64) -> bool {
        self.mean_discrepancy.abs() <= (z * self.std_error).max(self.residual_bound)
    }
}

struct PathOutcome {
    discrepancy: f64,
    transaction_cost: f64,
    d_clock: f64,
}

fn check_step(contract: &OptionContract, params: &ModelParams) -> Result<()> {
    contract.validate()?;
    params.validate()?;
    ensure(contract.t + params.dt < contract.maturity, "dt", || {
        format!(
            "rebalancing step t + dt = {} must end before maturity {}",
            contract.t + params.dt,
            contract.maturity
        )
    })
}

/// Clock for a single step [t, t + dt] at the default resolution.
fn step_clock(params: &ModelParams, t: f64) -> Result<Clock> {
    Clock::for_alpha(params.alpha, &TimeGrid::new(vec![t, t + params.dt])?)
}

/// Simulates one rebalancing step on `n_paths` independent paths (path i
/// uses stream id i of `stream`) and aggregates ΔΠ − ΔC. The option is
/// repriced at t + Δt with σ̂(t) held fixed over the step.
pub fn hedge_step_experiment(
    contract: &OptionContract,
    params: &ModelParams,
    n_paths: usize,
    stream: &RngStream,
) -> Result<HedgeStepReport> {
    ensure(n_paths >= MIN_HEDGE_PATHS, "n_paths", || {
        format!("need at least {MIN_HEDGE_PATHS} paths, got {n_paths}")
    })?;
    check_step(contract, params)?;
    let (s, t, dt) = (contract.spot, contract.t, params.dt);
    let vol = modified_volatility(params, t)?;
    let now = BlackTerms::new(contract, vol, params.r_d, params.r_f)?;
    let c0 = now.value(contract);
    let hedge = HedgePortfolio::replicating(c0, now.delta(contract.kind), s);
    let clock = step_clock(params, t)?;

    let outcomes = sample_paths(n_paths, |i| {
        let StepIncrement { d_clock, dw } = sample_step_increment(&clock, params.hurst, t, dt, &stream.with_stream(i))?;
        let s1 = s + asset_increment(s, params, d_clock, dw)?.exact;
        let next = OptionContract { spot: s1, t: t + dt, ..*contract };
        let later = BlackTerms::new(&next, vol, params.r_d, params.r_f)?;
        let c1 = later.value(&next);
        let transaction_cost = 0.5 * params.k * (later.delta(contract.kind) - hedge.stock_units).abs() * s1;
        let d_pi = hedge.stock_units * (s1 - s + params.r_f * s * dt) + params.r_d * hedge.bond_value * dt
            - transaction_cost;
        Ok(PathOutcome {
            discrepancy: d_pi - (c1 - c0),
            transaction_cost,
            d_clock,
        })
    })?;

    let discrepancies: Vec<f64> = outcomes.iter().map(|o| o.discrepancy).collect();
    let costs: Vec<f64> = outcomes.iter().map(|o| o.transaction_cost).collect();
    let pow_2h: Vec<f64> = outcomes.iter().map(|o| o.d_clock.powf(2.0 * params.hurst)).collect();
    let pow_h: Vec<f64> = outcomes.iter().map(|o| o.d_clock.powf(params.hurst)).collect();
    let est = MeanEstimate::from_samples(&discrepancies);
    let m2h = MeanEstimate::from_samples(&pow_2h).mean;
    let mh = MeanEstimate::from_samples(&pow_h).mean;

    let a_dt = effective_timescale(params.alpha, t)? * dt;
    let gamma = now.gamma(s, vol);
    let diffusion = 0.5 * params.sigma * params.sigma * s * s * gamma;
    let cost = 0.5 * params.k * FRAC_2_PI.sqrt() * params.sigma * s * s * gamma;
    let gap_2h = a_dt.powf(2.0 * params.hurst) - m2h;
    let gap_h = a_dt.powf(params.hurst) - mh;

    Ok(HedgeStepReport {
        n_paths,
        mean_discrepancy: est.mean,
        std_error: est.std_error,
        mean_transaction_cost: MeanEstimate::from_samples(&costs).mean,
        theoretical_residual: diffusion * gap_2h + cost * gap_h,
        residual_bound: diffusion * gap_2h.abs() + cost * gap_h.abs(),
        mean_clock_pow_2h: m2h,
        mean_clock_pow_h: mh,
        seed: stream.seed,
    })
}

/// ½σ̂²S²ΓΔt − ½σ²S²Γ(AΔt)^2H − (k/2)√(2/π)σS²Γ(AΔt)^H: the expected
/// one-step residual when the clock moments equal their approximations.
/// Zero by construction of σ̂, up to rounding.
pub fn analytic_residual(contract: &OptionContract, params: &ModelParams) -> Result<f64> {
    check_step(contract, params)?;
    let (s, dt, h) = (contract.spot, params.dt, params.hurst);
    let vol = modified_volatility(params, contract.t)?;
    let gamma = BlackTerms::new(contract, vol, params.r_d, params.r_f)?.gamma(s, vol);
    let a_dt = effective_timescale(params.alpha, contract.t)? * dt;
    let s2g = s * s * gamma;
    Ok(0.5 * vol * vol * s2g * dt
        - 0.5 * params.sigma * params.sigma * s2g * a_dt.powf(2.0 * h)
        - 0.5 * params.k * FRAC_2_PI.sqrt() * params.sigma * s2g * a_dt.powf(h))
}

/// Coupled estimates of the conditioning identities over one step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditioningReport {
    /// E[(ΔW)²]
    pub sq_increment: MeanEstimate,
    /// E[(ΔT)^2H]
    pub clock_pow_2h: MeanEstimate,
    /// E[(ΔW)² − (ΔT)^2H] on the same draws; zero in expectation.
    pub sq_coupled_gap: MeanEstimate,
    /// E|ΔW|
    pub abs_increment: MeanEstimate,
    /// √(2/π)·E[(ΔT)^H]
    pub scaled_clock_pow_h: MeanEstimate,
    /// E[|ΔW| − √(2/π)(ΔT)^H] on the same draws; zero in expectation.
    pub abs_coupled_gap: MeanEstimate,
    /// E[ΔT]
    pub clock_increment: MeanEstimate,
    /// E[(ΔT)^2H] − (E[ΔT])^2H from the samples.
    pub jensen_gap: f64,
    /// E[(ΔT)^2H] − (A·Δt)^2H from the samples.
    pub linearized_gap: f64,
}

impl ConditioningReport {
    pub fn identities_hold(&self, z: f64) -> bool {
        self.sq_coupled_gap.within(0.0, z) && self.abs_coupled_gap.within(0.0, z)
    }
}

/// Samples (ΔT, ΔW) over [t, t + params.dt] on `n_paths` paths.
pub fn conditioning_report(
    params: &ModelParams,
    t: f64,
    n_paths: usize,
    stream: &RngStream,
) -> Result<ConditioningReport> {
    params.validate()?;
    ensure(n_paths >= 2, "n_paths", || format!("need at least 2 paths, got {n_paths}"))?;
    ensure(t > 0.0 && t.is_finite(), "t", || format!("must be > 0, got {t}"))?;
    let h = params.hurst;
    let clock = step_clock(params, t)?;
    let draws = sample_paths(n_paths, |i| {
        sample_step_increment(&clock, h, t, params.dt, &stream.with_stream(i))
    })?;
    let c = FRAC_2_PI.sqrt();
    let collect = |f: &dyn Fn(&StepIncrement) -> f64| {
        MeanEstimate::from_samples(&draws.iter().map(f).collect::<Vec<_>>())
    };
    let clock_pow_2h = collect(&|d| d.d_clock.powf(2.0 * h));
    let clock_increment = collect(&|d| d.d_clock);
    let a_dt = effective_timescale(params.alpha, t)? * params.dt;
    Ok(ConditioningReport {
        sq_increment: collect(&|d| d.dw * d.dw),
        clock_pow_2h,
        sq_coupled_gap: collect(&|d| d.dw * d.dw - d.d_clock.powf(2.0 * h)),
        abs_increment: collect(&|d| d.dw.abs()),
        scaled_clock_pow_h: collect(&|d| c * d.d_clock.powf(h)),
        abs_coupled_gap: collect(&|d| d.dw.abs() - c * d.d_clock.powf(h)),
        clock_increment,
        jensen_gap: clock_pow_2h.mean - clock_increment.mean.powf(2.0 * h),
        linearized_gap: clock_pow_2h.mean - a_dt.powf(2.0 * h),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{reference_contract, reference_params, valid_params};
    use proptest::prelude::*;

    fn gk_params() -> ModelParams {
        ModelParams { k: 0.0, alpha: 1.0, hurst: 0.5, ..reference_params() }
    }

    #[test]
    fn increment_edge_cases() {
        let p = reference_params();
        let z = asset_increment(1.4, &p, 0.0, 0.0).unwrap();
        assert_eq!((z.exact, z.expansion), (0.0, 0.0));
        let flat = ModelParams { sigma: 1e-300, ..p };
        let inc = asset_increment(1.4, &flat, 0.5, 0.3).unwrap();
        assert!((inc.exact - 1.4 * (0.01f64 * 0.5).exp_m1()).abs() < 1e-16);
        assert!(asset_increment(0.0, &p, 0.1, 0.1).is_err());
        assert!(asset_increment(1.0, &p, -0.1, 0.1).is_err());
    }

    fn mean_expansion_gap(params: &ModelParams, dt: f64, n: u64) -> f64 {
        let clock = Clock::Identity;
        let total: f64 = (0..n)
            .map(|i| {
                let inc = sample_step_increment(&clock, params.hurst, 0.5, dt, &RngStream::new(77, i)).unwrap();
                let a = asset_increment(1.0, params, inc.d_clock, inc.dw).unwrap();
                (a.exact - a.expansion).abs()
            })
            .sum();
        total / n as f64
    }

    #[test]
    fn expansion_gap_is_third_order_without_drift() {
        let p = ModelParams { r_d: 0.02, r_f: 0.02, hurst: 0.5, alpha: 1.0, sigma: 0.3, ..reference_params() };
        let ratio = mean_expansion_gap(&p, 0.02, 20_000) / mean_expansion_gap(&p, 0.01, 20_000);
        assert!((ratio / 2f64.powf(1.5) - 1.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn matched_draw_expansion_gap_ratio() {
        // Halving both increments of a fixed draw isolates the order of the remainder.
        let p = ModelParams { r_d: 0.02, r_f: 0.02, sigma: 0.3, ..reference_params() };
        let q = ModelParams { r_d: 0.08, r_f: 0.0, sigma: 0.3, ..reference_params() };
        let mut rng = RngStream::new(5, 0).generator();
        let draws: Vec<(f64, f64)> = (0..10_000)
            .map(|_| {
                let dw: f64 = rand::Rng::sample(&mut rng, rand_distr::StandardNormal);
                (0.01, 0.1 * dw)
            })
            .collect();
        let gap = |params: &ModelParams, scale: f64| -> f64 {
            draws
                .iter()
                .map(|(dt, dw)| {
                    let a = asset_increment(1.0, params, dt * scale, dw * scale).unwrap();
                    (a.exact - a.expansion).abs()
                })
                .sum::<f64>()
        };
        let pure = gap(&p, 1.0) / gap(&p, 0.5);
        assert!((pure - 8.0).abs() < 0.5, "ratio {pure}");
        let drift = gap(&q, 1.0) / gap(&q, 0.5);
        assert!(drift > 3.0 && drift < 8.0, "ratio {drift}");
    }

    #[test]
    fn replicating_portfolio() {
        let h = HedgePortfolio::replicating(0.5, 0.4, 2.0);
        assert_eq!(h.portfolio_value, h.stock_units * 2.0 + h.bond_value);
    }

    #[test]
    fn preconditions() {
        let (c, p) = (reference_contract(), reference_params());
        let s = RngStream::new(1, 0);
        assert!(matches!(hedge_step_experiment(&c, &p, 1, &s), Err(crate::Error::Domain { name: "n_paths", .. })));
        let late = OptionContract { t: 0.995, ..c };
        assert!(matches!(hedge_step_experiment(&late, &p, 10_000, &s), Err(crate::Error::Domain { name: "dt", .. })));
    }

    #[test]
    fn classical_hedge_is_unbiased() {
        let r = hedge_step_experiment(&reference_contract(), &gk_params(), 20_000, &RngStream::new(3, 0)).unwrap();
        assert!(r.mean_discrepancy.abs() <= 3.0 * r.std_error, "{r:?}");
        assert_eq!(r.mean_transaction_cost, 0.0);
        assert!(r.residual_bound.abs() < 1e-15);
    }

    #[test]
    fn deterministic_and_clt_scaling() {
        let (c, p) = (reference_contract(), gk_params());
        let a = hedge_step_experiment(&c, &p, 10_000, &RngStream::new(8, 0)).unwrap();
        let b = hedge_step_experiment(&c, &p, 10_000, &RngStream::new(8, 0)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv_row(), b.to_csv_row());
        let d = hedge_step_experiment(&c, &p, 20_000, &RngStream::new(8, 0)).unwrap();
        let ratio = d.std_error / a.std_error;
        assert!((ratio - std::f64::consts::FRAC_1_SQRT_2).abs() < 0.05, "ratio {ratio}");
    }

    #[test]
    fn costs_are_nonnegative_with_subordination() {
        let r = hedge_step_experiment(&reference_contract(), &reference_params(), 10_000, &RngStream::new(4, 0)).unwrap();
        assert!(r.mean_transaction_cost > 0.0);
        assert!(r.residual_bound > 0.0);
        assert!(r.within_tolerance(3.0), "{r:?}");
    }

    #[test]
    fn csv_row_layout() {
        let r = HedgeStepReport {
            n_paths: 10,
            mean_discrepancy: 1.0,
            std_error: 0.5,
            mean_transaction_cost: 0.25,
            theoretical_residual: 0.0,
            residual_bound: 0.125,
            mean_clock_pow_2h: 0.0,
            mean_clock_pow_h: 0.0,
            seed: 42,
        };
        assert_eq!(r.to_csv_row().split(',').count(), HedgeStepReport::CSV_HEADER.split(',').count());
        assert!(r.to_csv_row().starts_with("10,") && r.to_csv_row().ends_with(",42"));
    }

    #[test]
    fn conditioning_identities_brownian() {
        let p = gk_params();
        let r = conditioning_report(&p, 0.1, 20_000, &RngStream::new(6, 0)).unwrap();
        assert!(r.identities_hold(3.0), "{r:?}");
        assert!(r.jensen_gap.abs() < 1e-13 && r.linearized_gap.abs() < 1e-13, "{r:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn approximated_moments_cancel(p in valid_params(), spot in 0.5f64..2.0, z in -1.5f64..1.5, t in 0.05f64..0.5) {
            let vol = modified_volatility(&p, t).unwrap();
            let maturity = t + p.dt + 0.5;
            let strike = spot * (z * vol * (maturity - t).sqrt()).exp();
            let c = OptionContract::call(spot, strike, t, maturity).unwrap();
            let r = analytic_residual(&c, &p).unwrap();
            let gamma = BlackTerms::new(&c, vol, p.r_d, p.r_f).unwrap().gamma(spot, vol);
            let scale = 0.5 * vol * vol * spot * spot * gamma * p.dt;
            prop_assert!(r.abs() <= 1e-12 * scale, "{} vs {}", r, scale);
        }
    }
}
