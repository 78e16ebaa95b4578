use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::dft::{dft, Direction};
use super::model::SpectralModel;
use crate::circuits::SignedWavenumberMap;
use crate::error::{Error, Result};
use crate::sim::StateVector;

const NORM_TOL: f64 = 1e-10;

/// Amplitudes of a state in the frame where the evolution is diagonal,
/// i.e. the components of `(H ⊗ DFT†)|Φ⟩`.
///
/// `c0[m]` multiplies `|0, k(m)⟩`, which evolves with `e^{−itω_k}`, and `c1[m]`
/// multiplies `|1, k(m)⟩`, which evolves with `e^{+itω_k}`. A static wavefield
/// puts equal weight in both sectors.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierAmplitudes {
    pub c0: Vec<Complex64>,
    pub c1: Vec<Complex64>,
}

impl FourierAmplitudes {
    /// Coefficients of an `(n+1)`-qubit wave state.
    pub fn from_state(state: &StateVector) -> Self {
        let n_points = state.dim() / 2;
        let (psi, phi) = state.amplitudes().split_at(n_points);
        let a = dft(psi, Direction::Inverse);
        let b = dft(phi, Direction::Inverse);
        FourierAmplitudes {
            c0: a.iter().zip(&b).map(|(x, y)| (x + y) * FRAC_1_SQRT_2).collect(),
            c1: a.iter().zip(&b).map(|(x, y)| (x - y) * FRAC_1_SQRT_2).collect(),
        }
    }

    /// Only the `|0⟩` sector populated.
    pub fn single_sector(c0: Vec<Complex64>) -> Self {
        let c1 = vec![Complex64::new(0.0, 0.0); c0.len()];
        FourierAmplitudes { c0, c1 }
    }

    pub fn n_points(&self) -> usize {
        self.c0.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c0.iter().chain(&self.c1).map(|c| c.norm_sqr()).sum()
    }

    /// `(weight, sign)` per `(sector, k)`, the sign being the direction in
    /// which that sector's phase rotates.
    fn weighted(&self) -> impl Iterator<Item = (f64, f64, i64)> + '_ {
        let map = SignedWavenumberMap::new(self.n_points().trailing_zeros() as usize);
        let upper = self
            .c0
            .iter()
            .enumerate()
            .map(move |(m, c)| (c.norm_sqr(), 1.0, map.wavenumber(m)));
        let lower = self
            .c1
            .iter()
            .enumerate()
            .map(move |(m, c)| (c.norm_sqr(), -1.0, map.wavenumber(m)));
        upper.chain(lower)
    }
}

/// The three views of the small-angle infidelity at one time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfidelityModel {
    /// `1 − |Σ_k |c_k|² e^{−itα(k)}|²`, summed over both sectors.
    pub exact: f64,
    /// Second-order form `t² Var(α)` under the weights `|c_k|²`.
    pub second_order: f64,
    /// `(t²π⁶ / 9N⁴) Σ_k |c_k|² (k³ − ⟨k³⟩)²`.
    pub bound: f64,
}

/// Infidelity between exact and small-angle evolution of `amps` at time `t`.
pub fn infidelity_model(amps: &FourierAmplitudes, t: f64) -> Result<InfidelityModel> {
    let total = amps.norm_sqr();
    if (total - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(total));
    }
    let n_points = amps.n_points();
    if n_points < 2 || !n_points.is_power_of_two() || amps.c1.len() != n_points {
        return Err(Error::InvalidParameter(format!(
            "Fourier amplitude length {n_points} is not a power of two"
        )));
    }
    let model = SpectralModel::new(n_points);

    let mut overlap = Complex64::new(0.0, 0.0);
    let (mut mean_a, mut mean_a2, mut mean_k3) = (0.0, 0.0, 0.0);
    for (w, sign, k) in amps.weighted() {
        let a = sign * model.alpha(k);
        overlap += w * Complex64::from_polar(1.0, -t * a);
        mean_a += w * a;
        mean_a2 += w * a * a;
        mean_k3 += w * sign * (k as f64).powi(3);
    }
    let var_k3: f64 = amps
        .weighted()
        .map(|(w, sign, k)| w * (sign * (k as f64).powi(3) - mean_k3).powi(2))
        .sum();
    let n4 = (n_points as f64).powi(4);
    Ok(InfidelityModel {
        exact: (1.0 - overlap.norm_sqr()).max(0.0),
        second_order: t * t * (mean_a2 - mean_a * mean_a),
        bound: t * t * PI.powi(6) / (9.0 * n4) * var_k3,
    })
}
