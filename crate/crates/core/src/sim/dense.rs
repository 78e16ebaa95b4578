//! Dense-matrix views of circuits, used for brute-force equivalence checks
//! on small registers.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::gate::Circuit;
use super::kernel;

pub type CMatrix = DMatrix<Complex64>;

/// Full `2^m × 2^m` unitary of `circuit`, column `j` being `U|j⟩`.
pub fn circuit_unitary(circuit: &Circuit) -> CMatrix {
    let m = circuit.num_qubits();
    let dim = 1usize << m;
    let mut out = CMatrix::zeros(dim, dim);
    let mut col = vec![Complex64::new(0.0, 0.0); dim];
    for j in 0..dim {
        col.iter_mut().for_each(|c| *c = Complex64::new(0.0, 0.0));
        col[j] = Complex64::new(1.0, 0.0);
        for g in circuit.gates() {
            kernel::apply(&mut col, m, g, false, 0);
        }
        out.column_mut(j).copy_from_slice(&col);
    }
    out
}

/// `max |a_ij − b_ij|`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `min_φ max |a_ij − e^{iφ} b_ij|`, with φ fixed by the overlap `Tr(b†a)`.
pub fn max_diff_up_to_phase(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    let overlap: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| y.conj() * x).sum();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - phase * y).norm())
        .fold(0.0, f64::max)
}

/// `max |(U†U − I)_ij|`.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let prod = u.adjoint() * u;
    max_abs_diff(&prod, &CMatrix::identity(u.nrows(), u.ncols()))
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    m.clone().singular_values().iter().copied().fold(0.0, f64::max)
}
