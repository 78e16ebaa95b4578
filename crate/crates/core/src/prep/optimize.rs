use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ansatz::BrickwallAnsatz;
use super::cost::{GradientMethod, PrepCost};
use super::lbfgs::{minimize, LbfgsConfig};
use crate::error::{Error, Result};
use crate::sim::StateVector;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    pub seed: u64,
    /// Independent random starts; the lowest final cost wins.
    pub restarts: usize,
    pub gradient: GradientMethod,
    pub lbfgs: LbfgsConfig,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            seed: 0,
            restarts: 1,
            gradient: GradientMethod::default(),
            lbfgs: LbfgsConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainResult {
    pub params: Vec<f64>,
    /// Cost per accepted step of the winning start; non-increasing.
    pub history: Vec<f64>,
    pub cost: f64,
    pub infidelity: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Index of the winning start.
    pub restart: usize,
}

/// Random start for restart `r`: uniform in `[0, 1)` from ChaCha8 stream `r`.
pub fn initial_params(num_params: usize, seed: u64, restart: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    (0..num_params).map(|_| rng.random::<f64>()).collect()
}

/// Train `ansatz` to prepare `target` from `|0…0⟩`.
pub fn optimize(ansatz: &BrickwallAnsatz, target: &StateVector, cfg: &OptimizerConfig) -> Result<TrainResult> {
    if cfg.restarts == 0 {
        return Err(Error::InvalidParameter("need at least one start".into()));
    }
    let runs: Vec<Result<TrainResult>> = if cfg.restarts == 1 {
        vec![run(ansatz, target, cfg, 0)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..cfg.restarts)
                .map(|r| s.spawn(move || run(ansatz, target, cfg, r)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("restart panicked"))
                .collect()
        })
    };
    let mut best: Option<TrainResult> = None;
    for r in runs {
        let r = r?;
        if best.as_ref().is_none_or(|b| r.cost < b.cost) {
            best = Some(r);
        }
    }
    Ok(best.expect("at least one start"))
}

fn run(ansatz: &BrickwallAnsatz, target: &StateVector, cfg: &OptimizerConfig, restart: usize) -> Result<TrainResult> {
    let init = initial_params(ansatz.num_params(), cfg.seed, restart);
    let mut out = optimize_from(ansatz, target, cfg, init)?;
    out.restart = restart;
    Ok(out)
}

/// Train from an explicit starting point.
pub fn optimize_from(
    ansatz: &BrickwallAnsatz,
    target: &StateVector,
    cfg: &OptimizerConfig,
    init: Vec<f64>,
) -> Result<TrainResult> {
    let cost = PrepCost::new(ansatz, target)?;
    if init.len() != cost.num_params() {
        return Err(Error::DimensionMismatch {
            expected: cost.num_params(),
            got: init.len(),
        });
    }
    let out = minimize(|x| cost.value_and_gradient(x, cfg.gradient), init, &cfg.lbfgs)?;
    let infidelity = cost.infidelity(&out.x)?;
    Ok(TrainResult {
        params: out.x,
        history: out.history,
        cost: out.f,
        infidelity,
        iterations: out.iterations,
        converged: out.converged,
        restart: 0,
    })
}
