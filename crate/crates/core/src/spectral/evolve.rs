use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::dft::{dft, Direction};
use super::model::SpectralModel;
use crate::circuits::SignedWavenumberMap;
use crate::error::{Error, Result};
use crate::sim::StateVector;

const STATIC_TOL: f64 = 1e-12;

/// Evolve a static `(ψ, 0)` state with the exact dispersion
/// `ω_k = 2N sin(πk/N)`, by dense DFTs rather than circuits.
pub fn exact_evolve(initial: &StateVector, t: f64) -> Result<StateVector> {
    let model = SpectralModel::new(initial.dim() / 2);
    evolve_with(initial, t, |k| model.omega(k))
}

/// Evolve a static state with the linearized dispersion `2πk`. Periodic in
/// `t` with period one.
pub fn smallangle_evolve(initial: &StateVector, t: f64) -> Result<StateVector> {
    let model = SpectralModel::new(initial.dim() / 2);
    evolve_with(initial, t, |k| model.omega_small_angle(k))
}

/// `(H ⊗ DFT) · diag(e^{∓itω_k}) · (H ⊗ DFT†)` applied to `(ψ, φ)ᵀ`.
pub fn evolve_with(initial: &StateVector, t: f64, omega: impl Fn(i64) -> f64) -> Result<StateVector> {
    if initial.num_qubits() < 2 {
        return Err(Error::InvalidParameter(
            "need a sign qubit and at least one grid qubit".into(),
        ));
    }
    let n_points = initial.dim() / 2;
    let (psi, phi) = initial.amplitudes().split_at(n_points);
    if phi.iter().map(|c| c.norm_sqr()).sum::<f64>() > STATIC_TOL {
        return Err(Error::NonStaticInitialState);
    }
    let map = SignedWavenumberMap::new(n_points.trailing_zeros() as usize);
    let a = dft(psi, Direction::Inverse);
    let b = dft(phi, Direction::Inverse);
    let mut up = Vec::with_capacity(n_points);
    let mut down = Vec::with_capacity(n_points);
    for m in 0..n_points {
        let w = omega(map.wavenumber(m)) * t;
        let rot = Complex64::from_polar(1.0, -w);
        up.push((a[m] + b[m]) * FRAC_1_SQRT_2 * rot);
        down.push((a[m] - b[m]) * FRAC_1_SQRT_2 * rot.conj());
    }
    let psi_k: Vec<Complex64> = up.iter().zip(&down).map(|(u, d)| (u + d) * FRAC_1_SQRT_2).collect();
    let phi_k: Vec<Complex64> = up.iter().zip(&down).map(|(u, d)| (u - d) * FRAC_1_SQRT_2).collect();
    let mut out = dft(&psi_k, Direction::Forward);
    out.extend(dft(&phi_k, Direction::Forward));
    StateVector::normalized(out)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::prep::{ricker_target, GridSpec, RickerParams};
    use crate::sim::pure_infidelity;

    fn ricker(n: usize) -> StateVector {
        ricker_target(&GridSpec::new(n).unwrap(), &RickerParams::default()).unwrap()
    }

    #[test]
    fn zero_time_is_identity() {
        let s = ricker(5);
        let out = exact_evolve(&s, 0.0).unwrap();
        assert!(pure_infidelity(&s, &out).unwrap() < 1e-12);
    }

    #[test]
    fn small_angle_is_periodic() {
        let s = ricker(6);
        let out = smallangle_evolve(&s, 1.0).unwrap();
        for (a, b) in s.amplitudes().iter().zip(out.amplitudes()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn single_mode_oscillates_between_sectors() {
        // ψ0 = plane wave k: ψ(t) = cos(ω t) f_k, φ(t) = −i sin(ω t) f_k.
        let n = 4;
        let n_points = 1 << n;
        let k = 3i64;
        let amps: Vec<Complex64> = (0..2 * n_points)
            .map(|j| {
                if j < n_points {
                    Complex64::from_polar(1.0, 2.0 * PI * (k * j as i64) as f64 / n_points as f64)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        let s = StateVector::normalized(amps).unwrap();
        let t = 0.37;
        let w = SpectralModel::new(n_points).omega(k);
        let out = exact_evolve(&s, t).unwrap();
        for j in 0..n_points {
            let expect_psi = s.amplitudes()[j] * (w * t).cos();
            let expect_phi = s.amplitudes()[j] * Complex64::new(0.0, -(w * t).sin());
            assert!((out.amplitudes()[j] - expect_psi).norm() < 1e-12);
            assert!((out.amplitudes()[n_points + j] - expect_phi).norm() < 1e-12);
        }
        assert!((out.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ricker_splits_into_two_pulses() {
        let n = 6;
        let n_points = 1usize << n;
        let s = exact_evolve(&ricker(n), 0.3).unwrap();
        let psi: Vec<f64> = s.amplitudes()[..n_points].iter().map(|a| a.norm_sqr()).collect();
        // Counter-propagating pulses centred near 0.2 and 0.8.
        let peak_near = |x: f64| {
            let j = (x * n_points as f64).round() as usize;
            psi[j - 3..=j + 3].iter().cloned().fold(0.0, f64::max)
        };
        let centre = psi[n_points / 2];
        assert!(peak_near(0.2) > 5.0 * centre);
        assert!(peak_near(0.8) > 5.0 * centre);
    }

    #[test]
    fn half_period_shifts_by_half_domain() {
        // At t = 1/2 both movers have travelled ±1/2, so ψ(x) → ψ(x + 1/2).
        let n = 6;
        let n_points = 1usize << n;
        let s = ricker(n);
        let out = smallangle_evolve(&s, 0.5).unwrap();
        for j in 0..n_points {
            let shifted = s.amplitudes()[(j + n_points / 2) % n_points];
            assert!((out.amplitudes()[j] - shifted).norm() < 1e-10);
        }
    }

    #[test]
    fn rejects_moving_initial_state() {
        let s = StateVector::basis(3, 0b100);
        assert_eq!(exact_evolve(&s, 0.1), Err(Error::NonStaticInitialState));
    }
}
