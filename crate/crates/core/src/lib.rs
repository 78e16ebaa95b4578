//! Statevector and density-matrix simulation of quantum circuits that evolve
//! the periodic 1D acoustic wave equation, with the classical spectral
//! reference used to check them.
//!
//! ```
//! use qwave::circuits::{evolve_state, DiagonalMode, EvolutionSpec};
//! use qwave::prep::{ricker_target, GridSpec, RickerParams};
//! use qwave::spectral::exact_evolve;
//! use qwave::sim::pure_infidelity;
//!
//! let psi0 = ricker_target(&GridSpec::new(5)?, &RickerParams::default())?;
//! let spec = EvolutionSpec::new(5, 0.25, DiagonalMode::Exact)?;
//! let out = evolve_state(&psi0, &spec)?;
//! assert!(pure_infidelity(&out, &exact_evolve(&psi0, 0.25)?)? < 1e-10);
//! # Ok::<(), qwave::Error>(())
//! ```

pub mod circuits;
pub mod compiler;
mod error;
pub mod fit;
pub mod prep;
pub mod sim;
pub mod spectral;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/simulator.md")]
    mod simulator {}
    #[doc = include_str!("../../../book/src/wave-circuits.md")]
    mod wave_circuits {}
    #[doc = include_str!("../../../book/src/spectral.md")]
    mod spectral {}
    #[doc = include_str!("../../../book/src/state-prep.md")]
    mod state_prep {}
    #[doc = include_str!("../../../book/src/compiler.md")]
    mod compiler {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
