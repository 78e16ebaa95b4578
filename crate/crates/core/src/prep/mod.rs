//! Variational preparation of the initial wave state.

mod ansatz;
mod checkpoint;
mod cost;
mod grid;
mod lbfgs;
mod optimize;

pub use ansatz::{BrickwallAnsatz, PARAMS_PER_BLOCK};
pub use checkpoint::Checkpoint;
pub use cost::{GradientMethod, PrepCost};
pub use grid::{ricker_target, GridSpec, RickerParams};
pub use lbfgs::{minimize, LbfgsConfig, LbfgsOutcome};
pub use optimize::{initial_params, optimize, optimize_from, OptimizerConfig, TrainResult};
