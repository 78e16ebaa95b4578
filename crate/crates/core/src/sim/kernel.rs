//! In-place gate kernels over a flat amplitude buffer.
//!
//! Qubit `q` of an `m`-qubit buffer is bit `m - 1 - q` of the index. The
//! density-matrix engine reuses these kernels on a `2m`-qubit buffer, acting
//! on row qubits with `U` and on column qubits with `U*`.

use num_complex::Complex64;

use super::gate::{Gate, Mat2};

#[inline]
fn mask(num_qubits: usize, q: usize) -> usize {
    1usize << (num_qubits - 1 - q)
}

/// Apply `gate` (with every target shifted by `offset`) to `amps`.
/// With `conj` set the complex-conjugated matrix is applied instead.
pub(crate) fn apply(amps: &mut [Complex64], num_qubits: usize, gate: &Gate, conj: bool, offset: usize) {
    debug_assert_eq!(amps.len(), 1 << num_qubits);
    let sign = if conj { -1.0 } else { 1.0 };
    match gate {
        Gate::H(_) | Gate::PhasedX { .. } => {
            let q = gate.qubits()[0] + offset;
            let mut u = gate.matrix_1q().expect("single-qubit gate");
            if conj {
                for row in u.iter_mut() {
                    for v in row.iter_mut() {
                        *v = v.conj();
                    }
                }
            }
            apply_1q(amps, num_qubits, q, &u);
        }
        Gate::Rz { qubit, theta } => {
            let m = mask(num_qubits, qubit + offset);
            let p0 = Complex64::from_polar(1.0, -sign * theta);
            let p1 = p0.conj();
            for (i, a) in amps.iter_mut().enumerate() {
                *a *= if i & m == 0 { p0 } else { p1 };
            }
        }
        Gate::Rzz { a, b, theta } => {
            let ma = mask(num_qubits, a + offset);
            let mb = mask(num_qubits, b + offset);
            let even = Complex64::from_polar(1.0, -sign * theta);
            let odd = even.conj();
            for (i, v) in amps.iter_mut().enumerate() {
                let parity = ((i & ma) != 0) ^ ((i & mb) != 0);
                *v *= if parity { odd } else { even };
            }
        }
        Gate::CPhase { control, target, theta } => {
            let both = mask(num_qubits, control + offset) | mask(num_qubits, target + offset);
            let phase = Complex64::from_polar(1.0, sign * theta);
            for (i, v) in amps.iter_mut().enumerate() {
                if i & both == both {
                    *v *= phase;
                }
            }
        }
        Gate::Diagonal { qubits, values } => {
            let masks: Vec<usize> = qubits.iter().map(|&q| mask(num_qubits, q + offset)).collect();
            for (i, v) in amps.iter_mut().enumerate() {
                let local = masks
                    .iter()
                    .fold(0usize, |acc, &m| (acc << 1) | usize::from(i & m != 0));
                let d = values[local];
                *v *= if conj { d.conj() } else { d };
            }
        }
        Gate::Reverse { qubits } => {
            let masks: Vec<usize> = qubits.iter().map(|&q| mask(num_qubits, q + offset)).collect();
            let all = masks.iter().fold(0, |acc, m| acc | m);
            let k = masks.len();
            for i in 0..amps.len() {
                let mut j = i & !all;
                for (idx, &m) in masks.iter().enumerate() {
                    if i & m != 0 {
                        j |= masks[k - 1 - idx];
                    }
                }
                if j > i {
                    amps.swap(i, j);
                }
            }
        }
    }
}

fn apply_1q(amps: &mut [Complex64], num_qubits: usize, q: usize, u: &Mat2) {
    let m = mask(num_qubits, q);
    let len = amps.len();
    let mut base = 0;
    while base < len {
        for i in base..base + m {
            let j = i | m;
            let a = amps[i];
            let b = amps[j];
            amps[i] = u[0][0] * a + u[0][1] * b;
            amps[j] = u[1][0] * a + u[1][1] * b;
        }
        base += 2 * m;
    }
}
