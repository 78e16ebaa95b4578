use crate::error::{Error, Result};
use crate::sim::Histogram;

/// Bernoulli estimate for one outcome of a sampled histogram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    /// Observed frequency `p̂`.
    pub mean: f64,
    /// `σ/√N_shots` with `σ = √(p̂(1 − p̂))`.
    pub eps_mc: f64,
    /// `ε_mc / p̂`; `None` when the outcome was never observed.
    pub eps_rel: Option<f64>,
}

/// Standard error of a sampled probability `p` after `shots` shots.
pub fn mc_error(p: f64, shots: u64) -> f64 {
    (p * (1.0 - p)).max(0.0).sqrt() / (shots as f64).sqrt()
}

/// `σ / (p √N_shots)`.
pub fn relative_error(p: f64, shots: u64) -> f64 {
    mc_error(p, shots) / p
}

/// Smallest shot count reaching a relative error of at most `target` for an
/// outcome of probability `p`.
pub fn shots_for_relative_error(p: f64, target: f64) -> u64 {
    let mut n = (((1.0 - p) / (p * target * target)).ceil() as u64).max(1);
    // Settle rounding at the boundary.
    while relative_error(p, n) > target {
        n += 1;
    }
    while n > 1 && relative_error(p, n - 1) <= target {
        n -= 1;
    }
    n
}

/// Per-outcome Monte Carlo errors for every basis state of the histogram.
pub fn mc_errors(histogram: &Histogram) -> Result<Vec<McEstimate>> {
    if histogram.counts().is_empty() {
        return Err(Error::EmptyHistogram);
    }
    let shots = histogram.shots();
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    Ok(histogram
        .counts()
        .iter()
        .map(|&c| {
            let mean = c as f64 / shots as f64;
            let eps_mc = mc_error(mean, shots);
            McEstimate {
                mean,
                eps_mc,
                eps_rel: (c > 0).then(|| eps_mc / mean),
            }
        })
        .collect())
}
