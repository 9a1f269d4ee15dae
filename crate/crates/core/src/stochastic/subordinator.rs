use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Exp1, Open01};

use super::grid::{TimeGrid, TimeSeriesPath};
use super::rng::RngStream;
use crate::error::{ensure, Error, Result};

/// Discretization of the inverse α-stable subordinator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubordinatorConfig {
    pub alpha: f64,
    /// Step δτ of the operational-time walk used to invert the subordinator.
    pub operational_time_step: f64,
    /// Upper bound on walk steps per path.
    pub max_steps: u64,
}

impl SubordinatorConfig {
    pub const DEFAULT_MAX_STEPS: u64 = 100_000_000;

    pub fn new(alpha: f64, operational_time_step: f64) -> Result<Self> {
        let cfg = Self {
            alpha,
            operational_time_step,
            max_steps: Self::DEFAULT_MAX_STEPS,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Default resolution for `grid`: δτ = (min spacing)^(1/α) / 100, so a
    /// typical subordinator increment over one step is about 10^(−2/α) of the
    /// finest grid gap.
    pub fn for_grid(alpha: f64, grid: &TimeGrid) -> Result<Self> {
        let spacing = grid.min_spacing().unwrap_or(1.0);
        Self::new(alpha, spacing.powf(1.0 / alpha) / 100.0)
    }

    pub fn with_max_steps(self, max_steps: u64) -> Self {
        Self { max_steps, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        ensure(self.alpha > 0.5 && self.alpha < 1.0, "alpha", || {
            format!("subordinator index must lie in (1/2, 1), got {}", self.alpha)
        })?;
        ensure(
            self.operational_time_step > 0.0 && self.operational_time_step.is_finite(),
            "operational_time_step",
            || format!("must be > 0, got {}", self.operational_time_step),
        )?;
        ensure(self.max_steps >= 1, "max_steps", || "must be at least 1".into())
    }
}

/// Standard positive α-stable variate with Laplace transform e^(−η^α),
/// via Kanter's representation of the Chambers-Mallows-Stuck method:
/// with U ~ Uniform(0, π) and E ~ Exp(1),
/// S = sin(αU) / sin(U)^(1/α) · (sin((1−α)U) / E)^((1−α)/α).
fn standard_positive_stable<R: Rng + ?Sized>(alpha: f64, rng: &mut R) -> f64 {
    loop {
        let u = PI * rng.sample::<f64, _>(Open01);
        let e: f64 = rng.sample(Exp1);
        let s = (alpha * u).sin() / u.sin().powf(1.0 / alpha)
            * (((1.0 - alpha) * u).sin() / e).powf((1.0 - alpha) / alpha);
        if s > 0.0 && s.is_finite() {
            return s;
        }
    }
}

/// One increment of the α-stable subordinator over operational time `dtau`:
/// a positive variate with E[e^(−ηQ)] = e^(−dtau·η^α).
pub fn sample_stable_increment<R: Rng + ?Sized>(alpha: f64, dtau: f64, rng: &mut R) -> Result<f64> {
    ensure(alpha > 0.0 && alpha < 1.0, "alpha", || format!("must lie in (0, 1), got {alpha}"))?;
    ensure(dtau > 0.0 && dtau.is_finite(), "dtau", || format!("must be > 0, got {dtau}"))?;
    Ok(dtau.powf(1.0 / alpha) * standard_positive_stable(alpha, rng))
}

/// Walks the subordinator on the δτ grid and records first passages above
/// each time. The passage happens inside step n (Q((n−1)δτ) ≤ t < Q(nδτ));
/// it is reported at the step midpoint (n − ½)δτ. T(0) = 0 exactly.
/// `times` must be nondecreasing.
pub(crate) fn invert_subordinator<R: Rng + ?Sized>(
    cfg: &SubordinatorConfig,
    times: &[f64],
    rng: &mut R,
) -> Result<Vec<f64>> {
    let step = cfg.operational_time_step;
    let scale = step.powf(1.0 / cfg.alpha);
    let mut level = 0.0;
    let mut steps: u64 = 0;
    let mut out = Vec::with_capacity(times.len());
    for &t in times {
        if t <= 0.0 {
            out.push(0.0);
            continue;
        }
        while level <= t {
            if steps >= cfg.max_steps {
                return Err(Error::StepCap { cap: cfg.max_steps as usize });
            }
            level += scale * standard_positive_stable(cfg.alpha, rng);
            steps += 1;
        }
        out.push((steps as f64 - 0.5) * step);
    }
    Ok(out)
}

/// Samples T_α(t) = inf{τ > 0 : Q_α(τ) > t} at every grid time.
pub fn simulate_inverse_subordinator(
    cfg: &SubordinatorConfig,
    grid: &TimeGrid,
    stream: &RngStream,
) -> Result<TimeSeriesPath> {
    cfg.validate()?;
    let values = invert_subordinator(cfg, grid.times(), &mut stream.generator())?;
    TimeSeriesPath::new(grid.clone(), values)
}

/// Operational clock driving the fractional noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Clock {
    /// T(t) = t: the α = 1 limit.
    Identity,
    InverseStable(SubordinatorConfig),
}

impl Clock {
    /// Identity for α = 1, otherwise the inverse subordinator at the default
    /// resolution for `grid`.
    pub fn for_alpha(alpha: f64, grid: &TimeGrid) -> Result<Self> {
        if alpha == 1.0 {
            Ok(Clock::Identity)
        } else {
            Ok(Clock::InverseStable(SubordinatorConfig::for_grid(alpha, grid)?))
        }
    }

    pub(crate) fn sample<R: Rng + ?Sized>(&self, times: &[f64], rng: &mut R) -> Result<Vec<f64>> {
        match self {
            Clock::Identity => Ok(times.to_vec()),
            Clock::InverseStable(cfg) => {
                cfg.validate()?;
                invert_subordinator(cfg, times, rng)
            }
        }
    }
}
