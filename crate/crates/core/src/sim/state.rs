use num_complex::Complex64;

use super::gate::{Circuit, Gate};
use super::kernel;
use crate::error::{Error, Result};

const NORM_TOL: f64 = 1e-10;

/// Pure state of `num_qubits` qubits. Qubit 0 is the most significant bit of
/// the amplitude index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// |0…0⟩.
    pub fn zero(num_qubits: usize) -> Self {
        Self::basis(num_qubits, 0)
    }

    /// Computational basis state |index⟩.
    pub fn basis(num_qubits: usize, index: usize) -> Self {
        assert!(num_qubits >= 1, "need at least one qubit");
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        StateVector { num_qubits, amplitudes }
    }

    /// Wrap an amplitude vector whose 2-norm is already one.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len())?;
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(StateVector { num_qubits, amplitudes })
    }

    /// Normalize `amplitudes` and wrap them.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len())?;
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm * norm));
        }
        for a in amplitudes.iter_mut() {
            *a /= norm;
        }
        Ok(StateVector { num_qubits, amplitudes })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Born-rule outcome probabilities.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        kernel::apply(&mut self.amplitudes, self.num_qubits, gate, false, 0);
        Ok(())
    }

    /// Apply every gate of `circuit` in order.
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                got: circuit.num_qubits(),
            });
        }
        // Gates in a Circuit were validated on push.
        for g in circuit.gates() {
            kernel::apply(&mut self.amplitudes, self.num_qubits, g, false, 0);
        }
        Ok(())
    }

    /// Consuming variant of [`apply_circuit`](Self::apply_circuit).
    pub fn evolved(mut self, circuit: &Circuit) -> Result<Self> {
        self.apply_circuit(circuit)?;
        Ok(self)
    }
}

pub(crate) fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "amplitude count {len} is not a power of two ≥ 2"
        )));
    }
    Ok(len.trailing_zeros() as usize)
}

/// `1 − |⟨a|b⟩|²` for two pure states.
pub fn pure_infidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    let overlap = a.inner(b)?;
    Ok((1.0 - overlap.norm_sqr()).clamp(0.0, 1.0))
}
