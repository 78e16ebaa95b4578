//! Dense statevector and density-matrix simulation.

pub mod dense;
mod density;
mod gate;
pub(crate) mod kernel;
mod sampling;
mod state;

pub use density::{state_infidelity, DensityMatrix, NoiseModel};
pub use gate::{Circuit, Gate, Mat2, Mat4};
pub use sampling::{sample_bitstrings, BornDistribution, Histogram};
pub use state::{pure_infidelity, StateVector};
