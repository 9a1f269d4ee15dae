use crate::error::{ensure, Result};
use crate::special::{gamma, ln_gamma};

fn check_alpha_t(alpha: f64, t: f64) -> Result<()> {
    ensure(alpha > 0.0 && alpha <= 1.0, "alpha", || format!("must lie in (0, 1], got {alpha}"))?;
    ensure(t > 0.0 && t.is_finite(), "t", || format!("must be > 0, got {t}"))
}

fn check_dt(dt: f64) -> Result<()> {
    ensure(dt > 0.0 && dt.is_finite(), "dt", || format!("must be > 0, got {dt}"))
}

/// E[T_α(t)^m] = t^(mα)·m! / Γ(mα + 1).
pub fn moment_t_alpha(alpha: f64, t: f64, m: u32) -> Result<f64> {
    ensure(m >= 1, "m", || "moment order must be >= 1".into())?;
    fractional_moment_t_alpha(alpha, t, m as f64)
}

/// E[T_α(t)^p] = Γ(p+1)·t^(pα) / Γ(pα+1) for real p > 0. T_α(t) is
/// Mittag-Leffler distributed, so the integer-moment formula extends to real
/// orders.
pub fn fractional_moment_t_alpha(alpha: f64, t: f64, p: f64) -> Result<f64> {
    check_alpha_t(alpha, t)?;
    ensure(p > 0.0 && p.is_finite(), "p", || format!("moment order must be > 0, got {p}"))?;
    Ok((ln_gamma(p + 1.0)? - ln_gamma(p * alpha + 1.0)? + p * alpha * t.ln()).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaTMode {
    /// [(t+dt)^α − t^α] / Γ(1+α).
    Exact,
    /// t^(α−1)·dt / Γ(α).
    Linearized,
}

/// E[T_α(t+dt) − T_α(t)].
pub fn expected_delta_t(alpha: f64, t: f64, dt: f64, mode: DeltaTMode) -> Result<f64> {
    check_alpha_t(alpha, t)?;
    check_dt(dt)?;
    if alpha == 1.0 {
        return Ok(dt);
    }
    Ok(match mode {
        DeltaTMode::Exact => ((t + dt).powf(alpha) - t.powf(alpha)) / gamma(1.0 + alpha)?,
        DeltaTMode::Linearized => t.powf(alpha - 1.0) * dt / gamma(alpha)?,
    })
}

/// The approximation (t^(α−1)/Γ(α)·dt)^(2H) of E[(W(t+dt) − W(t))²].
///
/// The exact second moment is E[(ΔT_α)^(2H)]; the two differ by a Jensen gap.
pub fn expected_sq_increment_w(alpha: f64, hurst: f64, t: f64, dt: f64) -> Result<f64> {
    check_alpha_t(alpha, t)?;
    check_dt(dt)?;
    ensure((0.5..1.0).contains(&hurst), "H", || {
        format!("Hurst exponent must lie in [1/2, 1), got {hurst}")
    })?;
    Ok(expected_delta_t(alpha, t, dt, DeltaTMode::Linearized)?.powf(2.0 * hurst))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn identity_clock() {
        assert!(rel(moment_t_alpha(1.0, 0.7, 1).unwrap(), 0.7) < 1e-14);
        assert!(rel(moment_t_alpha(1.0, 0.7, 2).unwrap(), 0.49) < 1e-14);
        for mode in [DeltaTMode::Exact, DeltaTMode::Linearized] {
            assert_eq!(expected_delta_t(1.0, 0.3, 0.01, mode).unwrap(), 0.01);
        }
        assert!(rel(expected_sq_increment_w(1.0, 0.5, 0.3, 0.01).unwrap(), 0.01) < 1e-14);
        assert!(rel(expected_sq_increment_w(1.0, 0.8, 0.3, 0.01).unwrap(), 0.01f64.powf(1.6)) < 1e-14);
    }

    #[test]
    fn moments_at_unit_time() {
        assert!(rel(moment_t_alpha(0.9, 1.0, 1).unwrap(), 1.0397541343476364146) < 1e-14);
        assert!(rel(moment_t_alpha(0.9, 1.0, 2).unwrap(), 1.1929680822564825866) < 1e-14);
    }

    #[test]
    fn delta_t_branches() {
        let exact = expected_delta_t(0.9, 0.1, 0.01, DeltaTMode::Exact).unwrap();
        let lin = expected_delta_t(0.9, 0.1, 0.01, DeltaTMode::Linearized).unwrap();
        assert!(rel(exact, 0.011723905332963897404) < 1e-13);
        assert!(rel(lin, 0.011780756115734574275) < 1e-13);
        assert!(rel(lin, exact) < 0.05);

        let exact = expected_delta_t(0.9, 1.0, 1e-6, DeltaTMode::Exact).unwrap();
        let lin = expected_delta_t(0.9, 1.0, 1e-6, DeltaTMode::Linearized).unwrap();
        assert!(rel(exact, lin) <= 1e-5);
    }

    #[test]
    fn sq_increment_value() {
        let v = expected_sq_increment_w(0.9, 0.8, 0.1, 0.01).unwrap();
        assert!(rel(v, 0.00082011936085772084183) < 1e-13);
    }

    #[test]
    fn fractional_matches_integer() {
        for alpha in [0.6, 0.9] {
            for m in 1..5 {
                let a = moment_t_alpha(alpha, 0.5, m).unwrap();
                let b = fractional_moment_t_alpha(alpha, 0.5, m as f64).unwrap();
                assert!(rel(a, b) < 1e-14);
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(moment_t_alpha(0.9, 0.0, 1).is_err());
        assert!(moment_t_alpha(0.9, 1.0, 0).is_err());
        assert!(moment_t_alpha(1.1, 1.0, 1).is_err());
        assert!(expected_delta_t(0.9, 1.0, 0.0, DeltaTMode::Exact).is_err());
        assert!(expected_sq_increment_w(0.9, 1.0, 1.0, 0.01).is_err());
    }
}
