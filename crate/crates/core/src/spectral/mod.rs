//! Classical reference for the wave-equation circuits: the periodic
//! Laplacian, a direct DFT, dense spectral evolution and the small-angle
//! infidelity analytics.
//!
//! Nothing here builds or simulates circuits, so it can serve as an
//! independent oracle for them.

mod dft;
mod evolve;
mod infidelity;
mod laplacian;
mod mc;
mod model;

use serde::{Deserialize, Serialize};

pub use dft::{dft, dft_matrix, Direction};
pub use evolve::{evolve_with, exact_evolve, smallangle_evolve};
pub use infidelity::{infidelity_model, FourierAmplitudes, InfidelityModel};
pub use laplacian::laplacian_matrix;
pub use mc::{mc_error, mc_errors, relative_error, shots_for_relative_error, McEstimate};
pub use model::SpectralModel;

/// One row of an infidelity analysis, as written to CSV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRow {
    pub n: usize,
    #[serde(rename = "N")]
    pub n_points: usize,
    pub t: f64,
    pub p: f64,
    pub epsilon: f64,
    pub epsilon_model: f64,
    pub bound: f64,
}
