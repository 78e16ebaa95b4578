use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::StateVector;

/// Periodic grid of `N = 2^n` points `x_j = j/N` on `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    n: usize,
}

impl GridSpec {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=24).contains(&n) {
            return Err(Error::InvalidParameter(format!("grid qubits {n} out of range")));
        }
        Ok(GridSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_points(&self) -> usize {
        1 << self.n
    }

    pub fn spacing(&self) -> f64 {
        1.0 / self.n_points() as f64
    }

    pub fn positions(&self) -> impl Iterator<Item = f64> {
        let a = self.spacing();
        (0..self.n_points()).map(move |j| j as f64 * a)
    }
}

/// Ricker wavelet centre and width.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RickerParams {
    pub mu: f64,
    pub sigma: f64,
}

impl Default for RickerParams {
    fn default() -> Self {
        RickerParams { mu: 0.5, sigma: 0.1 }
    }
}

impl RickerParams {
    /// `2/(√(3σ) π^{1/4}) · (1 − ((x−μ)/σ)²) · e^{−(x−μ)²/(2σ²)}`.
    pub fn value(&self, x: f64) -> f64 {
        let u = (x - self.mu) / self.sigma;
        2.0 / ((3.0 * self.sigma).sqrt() * PI.powf(0.25)) * (1.0 - u * u) * (-0.5 * u * u).exp()
    }
}

/// Normalized static wave state `(ψ, 0)ᵀ` on `n + 1` qubits with `ψ` the
/// sampled Ricker wavelet. Qubit 0 selects the field: `|0⟩` for `ψ`.
pub fn ricker_target(grid: &GridSpec, params: &RickerParams) -> Result<StateVector> {
    if params.sigma.is_nan() || params.sigma <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Ricker width must be positive, got {}",
            params.sigma
        )));
    }
    let mut amps: Vec<Complex64> = grid.positions().map(|x| Complex64::new(params.value(x), 0.0)).collect();
    amps.resize(2 * grid.n_points(), Complex64::new(0.0, 0.0));
    StateVector::normalized(amps)
}
