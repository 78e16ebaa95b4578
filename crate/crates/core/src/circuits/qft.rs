use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};

/// Angle of the controlled `R_κ = diag(1, e^{i2π/2^κ})`.
pub fn rotation_angle(kappa: u32) -> f64 {
    2.0 * PI / 2f64.powi(kappa as i32)
}

/// Recover `κ` from a controlled-phase angle, if it is `±2π/2^κ`.
pub fn rotation_order(theta: f64) -> Option<u32> {
    let kappa = (2.0 * PI / theta.abs()).log2().round();
    if !(1.0..=62.0).contains(&kappa) {
        return None;
    }
    let kappa = kappa as u32;
    ((rotation_angle(kappa) - theta.abs()).abs() < 1e-12).then_some(kappa)
}

/// Quantum Fourier transform on `n` qubits whose unitary is exactly the DFT
/// matrix `e^{+i2πjk/N}/√N` in this crate's bit order.
///
/// The output bit reversal is a [`Gate::Reverse`] wire relabelling, so the
/// only two-qubit gates are the `n(n−1)/2` controlled rotations.
pub fn build_qft(n: usize) -> Result<Circuit> {
    if n == 0 {
        return Err(Error::InvalidParameter("QFT needs at least one qubit".into()));
    }
    let mut c = Circuit::new(n);
    for q in 0..n {
        c.push(Gate::H(q))?;
        for r in q + 1..n {
            c.push(Gate::CPhase {
                control: r,
                target: q,
                theta: rotation_angle((r - q + 1) as u32),
            })?;
        }
    }
    if n > 1 {
        c.push(Gate::Reverse {
            qubits: (0..n).collect(),
        })?;
    }
    Ok(c)
}

/// Adjoint of [`build_qft`].
pub fn build_iqft(n: usize) -> Result<Circuit> {
    Ok(build_qft(n)?.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::dense::{circuit_unitary, max_abs_diff, CMatrix};
    use crate::spectral::{dft_matrix, Direction};

    #[test]
    fn one_qubit_is_hadamard() {
        let c = build_qft(1).unwrap();
        assert_eq!(c.gates(), &[Gate::H(0)]);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let h = CMatrix::from_row_slice(2, 2, &[s.into(), s.into(), s.into(), (-s).into()]);
        assert!(max_abs_diff(&circuit_unitary(&c), &h) < 1e-15);
    }

    #[test]
    fn matches_direct_dft_matrix() {
        for n in 1..=6 {
            let u = circuit_unitary(&build_qft(n).unwrap());
            let f = dft_matrix(1 << n, Direction::Forward);
            assert!(max_abs_diff(&u, &f) < 1e-10, "n={n}");
            let ui = circuit_unitary(&build_iqft(n).unwrap());
            let fi = dft_matrix(1 << n, Direction::Inverse);
            assert!(max_abs_diff(&ui, &fi) < 1e-10, "n={n}");
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        for n in 1..=5 {
            let mut c = build_iqft(n).unwrap();
            c.append(&build_qft(n).unwrap()).unwrap();
            let u = circuit_unitary(&c);
            assert!(max_abs_diff(&u, &CMatrix::identity(1 << n, 1 << n)) < 1e-10);
        }
    }

    #[test]
    fn rotation_order_roundtrip() {
        for k in 1..20 {
            assert_eq!(rotation_order(rotation_angle(k)), Some(k));
            assert_eq!(rotation_order(-rotation_angle(k)), Some(k));
        }
        assert_eq!(rotation_order(0.3), None);
    }

    #[test]
    fn zero_qubits_rejected() {
        assert!(build_qft(0).is_err());
    }
}
