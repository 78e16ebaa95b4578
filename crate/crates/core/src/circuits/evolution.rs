use serde::{Deserialize, Serialize};

use super::diagonal::{build_approx_diagonal, build_exact_diagonal};
use super::qft::{build_iqft, build_qft};
use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate, StateVector};

/// How the diagonal evolution operator is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagonalMode {
    /// Native diagonal with the exact dispersion.
    Exact,
    /// Gate-decomposed small-angle approximation.
    SmallAngle,
}

impl std::str::FromStr for DiagonalMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(DiagonalMode::Exact),
            "approx" | "small-angle" => Ok(DiagonalMode::SmallAngle),
            other => Err(Error::InvalidParameter(format!("unknown mode {other:?}"))),
        }
    }
}

/// Grid size, evolution time and diagonal mode for one evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionSpec {
    n: usize,
    t: f64,
    mode: DiagonalMode,
}

impl EvolutionSpec {
    pub fn new(n: usize, t: f64, mode: DiagonalMode) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("need n ≥ 2, got {n}")));
        }
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter(format!("evolution time {t}")));
        }
        Ok(EvolutionSpec { n, t, mode })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn mode(&self) -> DiagonalMode {
        self.mode
    }

    pub fn num_qubits(&self) -> usize {
        self.n + 1
    }
}

/// Evolution stage only: `H₀ · QFT†₁..ₙ · diagonal · QFT₁..ₙ · H₀`.
pub fn build_evolution(spec: &EvolutionSpec) -> Result<Circuit> {
    let n = spec.n;
    let mut c = Circuit::new(n + 1);
    c.push(Gate::H(0))?;
    c.append_shifted(&build_iqft(n)?, 1)?;
    match spec.mode {
        DiagonalMode::Exact => c.push(build_exact_diagonal(n, spec.t)?)?,
        DiagonalMode::SmallAngle => c.append(&build_approx_diagonal(n, spec.t)?)?,
    }
    c.append_shifted(&build_qft(n)?, 1)?;
    c.push(Gate::H(0))?;
    Ok(c)
}

/// Full program: state preparation followed by the evolution stage.
///
/// At `t = 0` the evolution is the identity and only `prep` is returned,
/// mirroring hardware runs where the `t = 0` circuit is the preparation alone.
pub fn assemble_evolution(prep: &Circuit, spec: &EvolutionSpec) -> Result<Circuit> {
    if prep.num_qubits() != spec.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: spec.num_qubits(),
            got: prep.num_qubits(),
        });
    }
    let mut c = prep.clone();
    if spec.t > 0.0 {
        c.append(&build_evolution(spec)?)?;
    }
    Ok(c)
}

/// Run the evolution stage on an injected initial state.
pub fn evolve_state(initial: &StateVector, spec: &EvolutionSpec) -> Result<StateVector> {
    let prep = Circuit::new(initial.num_qubits());
    initial.clone().evolved(&assemble_evolution(&prep, spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prep::{ricker_target, GridSpec, RickerParams};
    use crate::sim::pure_infidelity;
    use crate::spectral::{exact_evolve, smallangle_evolve};

    fn ricker(n: usize) -> StateVector {
        ricker_target(&GridSpec::new(n).unwrap(), &RickerParams::default()).unwrap()
    }

    #[test]
    fn zero_time_returns_prepared_state() {
        let s = ricker(4);
        let spec = EvolutionSpec::new(4, 0.0, DiagonalMode::Exact).unwrap();
        let out = evolve_state(&s, &spec).unwrap();
        assert!(pure_infidelity(&s, &out).unwrap() < 1e-10);
        let full = build_evolution(&spec).unwrap();
        let out = s.clone().evolved(&full).unwrap();
        for (a, b) in s.amplitudes().iter().zip(out.amplitudes()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn circuit_matches_oracle_evolutions() {
        for n in [3, 5, 6] {
            let s = ricker(n);
            for t in [0.3, 0.6, 0.9] {
                let exact = evolve_state(&s, &EvolutionSpec::new(n, t, DiagonalMode::Exact).unwrap()).unwrap();
                let oracle = exact_evolve(&s, t).unwrap();
                for (a, b) in exact.amplitudes().iter().zip(oracle.amplitudes()) {
                    assert!((a - b).norm() < 1e-10, "exact n={n} t={t}");
                }
                let approx = evolve_state(&s, &EvolutionSpec::new(n, t, DiagonalMode::SmallAngle).unwrap()).unwrap();
                let oracle = smallangle_evolve(&s, t).unwrap();
                for (a, b) in approx.amplitudes().iter().zip(oracle.amplitudes()) {
                    assert!((a - b).norm() < 1e-10, "approx n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn small_angle_wraps_at_unit_time() {
        for n in 2..=6 {
            let s = ricker(n);
            let spec = EvolutionSpec::new(n, 1.0, DiagonalMode::SmallAngle).unwrap();
            let out = evolve_state(&s, &spec).unwrap();
            assert!(pure_infidelity(&s, &out).unwrap() < 1e-10);
        }
    }

    #[test]
    fn register_mismatch_rejected() {
        let spec = EvolutionSpec::new(3, 0.2, DiagonalMode::Exact).unwrap();
        assert!(assemble_evolution(&Circuit::new(3), &spec).is_err());
        assert!(EvolutionSpec::new(1, 0.2, DiagonalMode::Exact).is_err());
        assert!(EvolutionSpec::new(3, -0.1, DiagonalMode::Exact).is_err());
    }
}
