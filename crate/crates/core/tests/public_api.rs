use approx::assert_relative_eq;
use subfbm_core::stochastic::{
    expected_sq_increment_w, sample_paths, simulate_clock_and_noise, simulate_exchange_rate, Clock, MeanEstimate,
};
use subfbm_core::{
    gk_price, greeks, minimal_price, modified_volatility, optimal_rebalancing_interval, price,
    ModelParams, OptionContract, RngStream, TimeGrid, TimeSeriesPath,
};

fn params() -> ModelParams {
    ModelParams::new(0.1, 0.03, 0.02, 0.9, 0.8, 0.01, 0.01).unwrap()
}

#[test]
fn minimal_price_is_price_at_optimal_interval() {
    let contract = OptionContract::call(1.4, 1.5, 0.1, 1.0).unwrap();
    let p = params();
    let min = minimal_price(&contract, &p).unwrap();
    let at_star = ModelParams { dt: min.dt_star, ..p };
    assert_relative_eq!(min.dt_star, optimal_rebalancing_interval(&p, 0.1).unwrap(), max_relative = 1e-15);
    assert_relative_eq!(min.sigma_min, modified_volatility(&at_star, 0.1).unwrap(), max_relative = 1e-12);
    assert_relative_eq!(min.c_min, price(&contract, &at_star, None).unwrap().price, max_relative = 1e-12);
}

#[test]
fn pricing_collapses_to_garman_kohlhagen() {
    let contract = OptionContract::call(1.2, 1.1, 0.3, 1.3).unwrap();
    let p = ModelParams::new(0.25, 0.05, 0.01, 1.0, 0.5, 0.0, 0.02).unwrap();
    let ours = price(&contract, &p, None).unwrap();
    let gk = gk_price(&contract, 0.25, 0.05, 0.01).unwrap();
    assert_relative_eq!(ours.price, gk.price, max_relative = 1e-14);
    let g = greeks(&contract, &p).unwrap();
    assert!(g.delta > 0.0 && g.gamma > 0.0 && g.vega > 0.0);
}

#[test]
fn exchange_rate_paths_round_trip_through_csv() {
    let grid = TimeGrid::uniform(1.0, 50).unwrap();
    let stream = RngStream::new(11, 0);
    let path = simulate_exchange_rate(&params(), 1.3, &grid, &stream).unwrap();
    assert_eq!(path, simulate_exchange_rate(&params(), 1.3, &grid, &stream).unwrap());
    assert_ne!(path, simulate_exchange_rate(&params(), 1.3, &grid, &stream.with_stream(1)).unwrap());
    assert_eq!(path.values[0], 1.3);
    assert!(path.values.iter().all(|v| v.is_finite() && *v > 0.0));
    assert_eq!(TimeSeriesPath::from_csv(&path.to_csv()).unwrap(), path);
}

#[test]
fn increment_variance_follows_clock_increment() {
    let (alpha, hurst, t, dt) = (0.8, 0.7, 0.5, 0.1);
    let grid = TimeGrid::new(vec![t, t + dt]).unwrap();
    let clock = Clock::for_alpha(alpha, &grid).unwrap();
    let stream = RngStream::new(12, 0);
    let pairs = sample_paths(40_000, |i| {
        let path = simulate_clock_and_noise(&clock, hurst, &grid, &stream.with_stream(i))?;
        let dw = path.noise.values[1] - path.noise.values[0];
        let d_clock = path.clock.values[1] - path.clock.values[0];
        Ok((dw * dw, d_clock.powf(2.0 * hurst)))
    })
    .unwrap();
    let gap: Vec<f64> = pairs.iter().map(|(sq, clock)| sq - clock).collect();
    let est = MeanEstimate::from_samples(&gap);
    assert!(est.within(0.0, 4.0), "{est:?}");
    let clock_moment = MeanEstimate::from_samples(&pairs.iter().map(|p| p.1).collect::<Vec<_>>());
    assert!(clock_moment.mean > expected_sq_increment_w(alpha, hurst, t, dt).unwrap());
}
