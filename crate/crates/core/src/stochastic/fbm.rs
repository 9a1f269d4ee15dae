use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{ensure, Error, Result};

const JITTER: f64 = 1e-12;

/// Exact fractional Brownian motion sampler on a fixed set of times.
///
/// Duplicate times and time 0 are factored out: the Cholesky factor is built
/// over the distinct positive times only and values are replicated afterwards.
#[derive(Debug, Clone)]
pub struct FbmSampler {
    hurst: f64,
    /// For each input time, the index into the distinct positive times, or
    /// `None` for t = 0.
    slots: Vec<Option<usize>>,
    factor: DMatrix<f64>,
}

impl FbmSampler {
    /// `times` must be nondecreasing and nonnegative; duplicates are allowed.
    pub fn new(hurst: f64, times: &[f64]) -> Result<Self> {
        ensure((0.5..1.0).contains(&hurst), "H", || {
            format!("Hurst exponent must lie in [1/2, 1), got {hurst}")
        })?;
        ensure(
            times.iter().all(|t| t.is_finite() && *t >= 0.0),
            "times",
            || "times must be finite and >= 0".into(),
        )?;
        ensure(times.windows(2).all(|w| w[0] <= w[1]), "times", || {
            "times must be nondecreasing".into()
        })?;

        let mut distinct: Vec<f64> = Vec::new();
        let slots = times
            .iter()
            .map(|&t| {
                if t == 0.0 {
                    return None;
                }
                if distinct.last() != Some(&t) {
                    distinct.push(t);
                }
                Some(distinct.len() - 1)
            })
            .collect();

        let two_h = 2.0 * hurst;
        let n = distinct.len();
        let cov = DMatrix::from_fn(n, n, |i, j| {
            let (s, t) = (distinct[i], distinct[j]);
            0.5 * (s.powf(two_h) + t.powf(two_h) - (t - s).abs().powf(two_h))
        });
        let factor = match cov.clone().cholesky() {
            Some(c) => c.unpack(),
            None => {
                let max_diag = cov.diagonal().max();
                let jittered = cov + DMatrix::identity(n, n) * (JITTER * max_diag);
                jittered.cholesky().ok_or(Error::Factorization { size: n })?.unpack()
            }
        };
        Ok(Self { hurst, slots, factor })
    }

    pub fn hurst(&self) -> f64 {
        self.hurst
    }

    /// Number of distinct positive times in the factorization.
    pub fn dimension(&self) -> usize {
        self.factor.nrows()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let n = self.factor.nrows();
        let z = DVector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
        let x = &self.factor * z;
        self.slots.iter().map(|slot| slot.map_or(0.0, |i| x[i])).collect()
    }
}

/// One draw of B_H at `times` (nondecreasing, ≥ 0, duplicates allowed).
pub fn simulate_fbm_at_times<R: Rng + ?Sized>(hurst: f64, times: &[f64], rng: &mut R) -> Result<Vec<f64>> {
    Ok(FbmSampler::new(hurst, times)?.sample(rng))
}
