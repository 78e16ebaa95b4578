use nalgebra::DMatrix;
use num_complex::Complex64;

use super::gate::{Circuit, Gate};
use super::kernel;
use super::state::{qubits_for_len, StateVector};
use crate::error::{Error, Result};

const STATE_TOL: f64 = 1e-10;

/// Two-qubit depolarizing noise applied after every entangling gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    p: f64,
}

impl NoiseModel {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(NoiseModel { p })
    }

    pub fn noiseless() -> Self {
        NoiseModel { p: 0.0 }
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Mixed state over `num_qubits` qubits, stored row-major.
///
/// Entry `(r, c)` lives at `r << num_qubits | c`, so the buffer is a
/// `2m`-qubit vector whose first `m` qubits index rows.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    entries: Vec<Complex64>,
}

impl DensityMatrix {
    pub fn from_pure(state: &StateVector) -> Self {
        let a = state.amplitudes();
        let dim = a.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in a {
            for c in a {
                entries.push(r * c.conj());
            }
        }
        DensityMatrix {
            num_qubits: state.num_qubits(),
            entries,
        }
    }

    pub fn maximally_mixed(num_qubits: usize) -> Self {
        let dim = 1usize << num_qubits;
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(1.0 / dim as f64, 0.0);
        }
        DensityMatrix { num_qubits, entries }
    }

    /// Wrap a row-major matrix, checking Hermiticity, unit trace and
    /// positive semidefiniteness.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let num_qubits = qubits_for_len(dim)?;
        let rho = DensityMatrix { num_qubits, entries };
        rho.check()?;
        Ok(rho)
    }

    fn check(&self) -> Result<()> {
        let dim = self.dim();
        for r in 0..dim {
            for c in r..dim {
                if (self.get(r, c) - self.get(c, r).conj()).norm() > STATE_TOL {
                    return Err(Error::InvalidDensityMatrix(format!("not Hermitian at ({r}, {c})")));
                }
            }
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace is {tr}")));
        }
        let min = self.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("negative eigenvalue {min}")));
        }
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries[(r << self.num_qubits) | c]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    /// Tr(ρ²).
    pub fn purity(&self) -> f64 {
        // ρ Hermitian: Tr(ρ²) = Σ |ρ_rc|².
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }

    /// Diagonal of ρ, i.e. the Born distribution in the computational basis.
    pub fn probabilities(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.get(i, i).re.max(0.0)).collect()
    }

    /// Eigenvalues of the Hermitian matrix, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let dim = self.dim();
        let m = DMatrix::from_fn(dim, dim, |r, c| self.get(r, c));
        let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// ⟨ψ|ρ|ψ⟩.
    pub fn expectation(&self, psi: &StateVector) -> Result<Complex64> {
        if psi.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: psi.dim(),
            });
        }
        let a = psi.amplitudes();
        let dim = self.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for r in 0..dim {
            let row = &self.entries[r * dim..(r + 1) * dim];
            let rho_psi: Complex64 = row.iter().zip(a).map(|(x, y)| x * y).sum();
            acc += a[r].conj() * rho_psi;
        }
        Ok(acc)
    }

    /// ρ → UρU†.
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        self.conjugate(gate);
        Ok(())
    }

    fn conjugate(&mut self, gate: &Gate) {
        let m = self.num_qubits;
        kernel::apply(&mut self.entries, 2 * m, gate, false, 0);
        kernel::apply(&mut self.entries, 2 * m, gate, true, m);
    }

    /// Noiseless evolution.
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        self.apply_circuit_noisy(circuit, &NoiseModel::noiseless())
    }

    /// Evolve under `circuit`, following every two-qubit gate with the
    /// depolarizing channel on its target pair. Single-qubit gates are exact.
    pub fn apply_circuit_noisy(&mut self, circuit: &Circuit, noise: &NoiseModel) -> Result<()> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                got: circuit.num_qubits(),
            });
        }
        for g in circuit.gates() {
            self.conjugate(g);
            if noise.p > 0.0 && g.is_two_qubit() {
                let q = g.qubits();
                self.depolarize_pair(q[0], q[1], noise.p)?;
            }
        }
        Ok(())
    }

    /// Two-qubit depolarizing channel
    /// `E(ρ) = (1 − p)ρ + (p/15) Σ_{P ≠ II} PρP†` on qubits `(a, b)`.
    ///
    /// Uses `Σ_P PρP† = 4 I_ab ⊗ Tr_ab ρ` over all sixteen Paulis, so
    /// `E(ρ) = (1 − 16p/15)ρ + (4p/15) I_ab ⊗ Tr_ab ρ`.
    pub fn depolarize_pair(&mut self, a: usize, b: usize, p: f64) -> Result<()> {
        let m = self.num_qubits;
        Gate::Rzz { a, b, theta: 0.0 }.validate(m)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        let keep = 1.0 - 16.0 * p / 15.0;
        let mix = 4.0 * p / 15.0;
        let bit = |q: usize| 1usize << (m - 1 - q);
        let (ma, mb) = (bit(a), bit(b));
        let offsets = [0, mb, ma, ma | mb];
        let pair = ma | mb;
        let dim = self.dim();
        for r0 in (0..dim).filter(|r| r & pair == 0) {
            for c0 in (0..dim).filter(|c| c & pair == 0) {
                let traced: Complex64 = offsets.iter().map(|&s| self.entries[((r0 | s) << m) | (c0 | s)]).sum();
                for &sr in &offsets {
                    for &sc in &offsets {
                        let idx = ((r0 | sr) << m) | (c0 | sc);
                        self.entries[idx] *= keep;
                        if sr == sc {
                            self.entries[idx] += mix * traced;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Infidelity `1 − ⟨Φ|ρ|Φ⟩` of a mixed state against a pure reference.
pub fn state_infidelity(exact: &StateVector, rho: &DensityMatrix) -> Result<f64> {
    let overlap = rho.expectation(exact)?;
    debug_assert!(overlap.im.abs() < 1e-8, "imaginary overlap {overlap}");
    Ok((1.0 - overlap.re).clamp(0.0, 1.0))
}
