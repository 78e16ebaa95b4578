use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ansatz::{with_angle, BrickwallAnsatz};
use crate::error::{Error, Result};
use crate::sim::kernel;
use crate::sim::{Gate, StateVector};

/// How the cost gradient is computed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradientMethod {
    /// `(C(θ + h eᵢ) − C(θ − h eᵢ)) / 2h` per parameter.
    CentralDifference { h: f64 },
    /// Reverse-mode sweep through the circuit; exact up to rounding.
    #[default]
    Adjoint,
}

/// Preparation cost `1 − Re⟨g|U(θ)|0⟩` and its gradient.
#[derive(Debug, Clone)]
pub struct PrepCost<'a> {
    ansatz: &'a BrickwallAnsatz,
    target: &'a StateVector,
}

impl<'a> PrepCost<'a> {
    pub fn new(ansatz: &'a BrickwallAnsatz, target: &'a StateVector) -> Result<Self> {
        if target.num_qubits() != ansatz.num_qubits() {
            return Err(Error::DimensionMismatch {
                expected: ansatz.num_qubits(),
                got: target.num_qubits(),
            });
        }
        if (target.norm_sqr() - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(target.norm_sqr()));
        }
        Ok(PrepCost { ansatz, target })
    }

    pub fn num_params(&self) -> usize {
        self.ansatz.num_params()
    }

    /// `U(θ)|0…0⟩`.
    pub fn prepared(&self, theta: &[f64]) -> Result<StateVector> {
        StateVector::zero(self.ansatz.num_qubits()).evolved(&self.ansatz.to_circuit(theta)?)
    }

    pub fn value(&self, theta: &[f64]) -> Result<f64> {
        let psi = self.prepared(theta)?;
        Ok(1.0 - self.target.inner(&psi)?.re)
    }

    /// `1 − |⟨g|U(θ)|0⟩|²`.
    pub fn infidelity(&self, theta: &[f64]) -> Result<f64> {
        let psi = self.prepared(theta)?;
        Ok((1.0 - self.target.inner(&psi)?.norm_sqr()).clamp(0.0, 1.0))
    }

    pub fn value_and_gradient(&self, theta: &[f64], method: GradientMethod) -> Result<(f64, Vec<f64>)> {
        match method {
            GradientMethod::Adjoint => self.adjoint(theta),
            GradientMethod::CentralDifference { h } => {
                if h.is_nan() || h <= 0.0 {
                    return Err(Error::InvalidParameter(format!("difference step {h}")));
                }
                let f = self.value(theta)?;
                let mut x = theta.to_vec();
                let mut grad = Vec::with_capacity(theta.len());
                for i in 0..theta.len() {
                    x[i] = theta[i] + h;
                    let fp = self.value(&x)?;
                    x[i] = theta[i] - h;
                    let fm = self.value(&x)?;
                    x[i] = theta[i];
                    grad.push((fp - fm) / (2.0 * h));
                }
                Ok((f, grad))
            }
        }
    }

    fn adjoint(&self, theta: &[f64]) -> Result<(f64, Vec<f64>)> {
        let m = self.ansatz.num_qubits();
        if theta.len() != self.num_params() {
            return Err(Error::DimensionMismatch {
                expected: self.num_params(),
                got: theta.len(),
            });
        }
        let gates: Vec<(Gate, Option<usize>)> = self
            .ansatz
            .template()
            .into_iter()
            .map(|tg| match tg.param {
                Some(i) => (with_angle(tg.gate, theta[i]), Some(i)),
                None => (tg.gate, None),
            })
            .collect();

        let mut psi = StateVector::zero(m).into_amplitudes();
        for (g, _) in &gates {
            kernel::apply(&mut psi, m, g, false, 0);
        }
        let overlap: Complex64 = self
            .target
            .amplitudes()
            .iter()
            .zip(&psi)
            .map(|(g, p)| g.conj() * p)
            .sum();
        let value = 1.0 - overlap.re;

        // dψ/dθ = −i G ψ for every gate e^{−iθG}; dC/dθ = −Im⟨λ|G|ψ⟩.
        let mut lambda = self.target.amplitudes().to_vec();
        let mut grad = vec![0.0; theta.len()];
        for (g, param) in gates.iter().rev() {
            if let Some(i) = param {
                grad[*i] -= generator_expectation(&lambda, &psi, m, g).im;
            }
            let inv = g.inverse();
            kernel::apply(&mut psi, m, &inv, false, 0);
            kernel::apply(&mut lambda, m, &inv, false, 0);
        }
        Ok((value, grad))
    }
}

/// `⟨λ|G|ψ⟩` for the generator `G` of a rotation gate.
fn generator_expectation(lambda: &[Complex64], psi: &[Complex64], m: usize, gate: &Gate) -> Complex64 {
    let bit = |q: usize| 1usize << (m - 1 - q);
    let sign = |on: bool| if on { -1.0 } else { 1.0 };
    match *gate {
        Gate::Rz { qubit, .. } => {
            let b = bit(qubit);
            lambda
                .iter()
                .zip(psi)
                .enumerate()
                .map(|(i, (l, p))| l.conj() * p * sign(i & b != 0))
                .sum()
        }
        Gate::Rzz { a, b, .. } => {
            let (ma, mb) = (bit(a), bit(b));
            lambda
                .iter()
                .zip(psi)
                .enumerate()
                .map(|(i, (l, p))| l.conj() * p * sign(((i & ma) != 0) ^ ((i & mb) != 0)))
                .sum()
        }
        Gate::PhasedX { qubit, phi, .. } => {
            // cos φ X + sin φ Y: |1⟩⟨0| gets e^{iφ}, |0⟩⟨1| gets e^{−iφ}.
            let b = bit(qubit);
            let up = Complex64::from_polar(1.0, phi);
            let down = up.conj();
            (0..psi.len())
                .map(|i| {
                    let j = i ^ b;
                    let coeff = if i & b != 0 { up } else { down };
                    lambda[i].conj() * coeff * psi[j]
                })
                .sum()
        }
        _ => unreachable!("only rotation gates carry parameters"),
    }
}
