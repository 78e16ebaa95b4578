//! Circuit builders for the spectral wave-equation evolution.

mod diagonal;
mod evolution;
mod qft;
pub mod text;
mod wavenumber;

pub use diagonal::{build_approx_diagonal, build_exact_diagonal, diagonal_from_dispersion, DiagonalAngles};
pub use evolution::{assemble_evolution, build_evolution, evolve_state, DiagonalMode, EvolutionSpec};
pub use qft::{build_iqft, build_qft, rotation_angle, rotation_order};
pub use wavenumber::SignedWavenumberMap;
