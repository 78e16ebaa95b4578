//! Lowering to `{RZ, PhasedX, RZZ}`, gate counting and approximate-QFT pruning.

mod count;
mod lower;
mod prune;

pub use count::{count, GateCounts};
pub use lower::{lower, lower_gate};
pub use prune::{prune_qft, PruneSpec, Pruned, MAX_DEVIATION_QUBITS};
