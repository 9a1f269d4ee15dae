use crate::csv_format::{format_real, parse_real};
use crate::error::{domain, ensure, Result};

/// Strictly increasing, nonnegative sample times (years).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    times: Vec<f64>,
}

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        ensure(!times.is_empty(), "grid", || "time grid must not be empty".into())?;
        ensure(times.iter().all(|t| t.is_finite() && *t >= 0.0), "grid", || {
            "grid times must be finite and >= 0".into()
        })?;
        ensure(times.windows(2).all(|w| w[1] > w[0]), "grid", || {
            "grid times must be strictly increasing".into()
        })?;
        Ok(Self { times })
    }

    /// `n_steps + 1` equally spaced points on [0, horizon]; `n_steps = 0`
    /// gives the single point 0.
    pub fn uniform(horizon: f64, n_steps: usize) -> Result<Self> {
        ensure(horizon > 0.0 && horizon.is_finite(), "horizon", || {
            format!("must be > 0, got {horizon}")
        })?;
        if n_steps == 0 {
            return Self::new(vec![0.0]);
        }
        let times = (0..=n_steps)
            .map(|i| if i == n_steps { horizon } else { horizon * i as f64 / n_steps as f64 })
            .collect();
        Self::new(times)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Smallest positive gap between consecutive points, counting the gap
    /// from the origin to the first point. `None` for the grid `[0]`.
    pub fn min_spacing(&self) -> Option<f64> {
        std::iter::once(0.0)
            .chain(self.times.iter().copied())
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| w[1] - w[0])
            .filter(|d| *d > 0.0)
            .reduce(f64::min)
    }
}

/// A sampled path: one value per grid time.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesPath {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
}

impl TimeSeriesPath {
    pub fn new(grid: TimeGrid, values: Vec<f64>) -> Result<Self> {
        ensure(grid.len() == values.len(), "values", || {
            format!("{} values for {} grid points", values.len(), grid.len())
        })?;
        Ok(Self { grid, values })
    }

    pub fn times(&self) -> &[f64] {
        self.grid.times()
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] >= w[0])
    }

    /// Number of consecutive pairs with identical values (flat steps).
    pub fn flat_steps(&self) -> usize {
        self.values.windows(2).filter(|w| w[1] == w[0]).count()
    }

    /// CSV with header `t,value`, one LF-terminated row per grid point.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,value\n");
        for (t, v) in self.times().iter().zip(&self.values) {
            out.push_str(&format_real(*t));
            out.push(',');
            out.push_str(&format_real(*v));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some("t,value") => {}
            other => return Err(domain("csv", format!("expected header t,value, got {other:?}"))),
        }
        let mut times = Vec::new();
        let mut values = Vec::new();
        for line in lines.filter(|l| !l.is_empty()) {
            let (t, v) = line
                .split_once(',')
                .ok_or_else(|| domain("csv", format!("malformed row {line:?}")))?;
            times.push(parse_real(t)?);
            values.push(parse_real(v)?);
        }
        Self::new(TimeGrid::new(times)?, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grid_validation() {
        assert!(TimeGrid::new(vec![]).is_err());
        assert!(TimeGrid::new(vec![0.0, 0.0]).is_err());
        assert!(TimeGrid::new(vec![0.5, 0.2]).is_err());
        assert!(TimeGrid::new(vec![-0.1, 0.2]).is_err());
        assert!(TimeGrid::new(vec![0.0]).is_ok());
    }

    #[test]
    fn uniform_grid_and_spacing() {
        let g = TimeGrid::uniform(1.0, 4).unwrap();
        assert_eq!(g.times(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(g.min_spacing(), Some(0.25));
        assert_eq!(TimeGrid::uniform(1.0, 0).unwrap().times(), &[0.0]);
        assert_eq!(TimeGrid::new(vec![0.0]).unwrap().min_spacing(), None);
        assert!((TimeGrid::new(vec![0.1, 0.11]).unwrap().min_spacing().unwrap() - 0.01).abs() < 1e-15);
        assert_eq!(TimeGrid::new(vec![0.5, 2.0]).unwrap().min_spacing(), Some(0.5));
    }

    #[test]
    fn csv_layout() {
        let p = TimeSeriesPath::new(TimeGrid::new(vec![0.0, 0.5]).unwrap(), vec![1.0, 1.25]).unwrap();
        assert_eq!(
            p.to_csv(),
            "t,value\n0.0000000000000000e0,1.0000000000000000e0\n5.0000000000000000e-1,1.2500000000000000e0\n"
        );
        assert!(TimeSeriesPath::from_csv("time,value\n").is_err());
        assert!(TimeSeriesPath::new(TimeGrid::new(vec![0.0]).unwrap(), vec![]).is_err());
    }

    proptest! {
        #[test]
        fn csv_round_trip(steps in 1usize..20, horizon in 0.01f64..5.0, seed in any::<u64>()) {
            let grid = TimeGrid::uniform(horizon, steps).unwrap();
            let values = (0..=steps).map(|i| ((seed ^ i as u64) as f64).sin() * 1e3).collect();
            let path = TimeSeriesPath::new(grid, values).unwrap();
            prop_assert_eq!(TimeSeriesPath::from_csv(&path.to_csv()).unwrap(), path);
        }
    }
}
