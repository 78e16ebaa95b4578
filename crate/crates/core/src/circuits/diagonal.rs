use std::f64::consts::PI;

use num_complex::Complex64;

use super::wavenumber::SignedWavenumberMap;
use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};
use crate::spectral::SpectralModel;

/// Rotation angles of the small-angle diagonal on `n + 1` qubits, in the
/// `exp(−iθZ)` / `exp(−iθZZ)` convention.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalAngles {
    /// Single-qubit `Rz` on the sign qubit 0: `(2^{n−1} − 1)πt`.
    pub global_z: f64,
    /// Angle of the sign-controlled phase `e^{itNπZ₀} ⊗ |1⟩⟨1|₁`, written as
    /// `Rz(θ)` on qubit 0 controlled by qubit 1: `θ = −Nπt`.
    pub sign_controlled_z: f64,
    /// `Rzz(θ_q)` on `(0, q)` for `q = 2..=n`: `θ_q = −2^{n−q}πt`.
    pub zz: Vec<f64>,
}

impl DiagonalAngles {
    pub fn new(n: usize, t: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "small-angle diagonal needs n ≥ 2, got {n}"
            )));
        }
        let n_points = (1u64 << n) as f64;
        Ok(DiagonalAngles {
            global_z: (2f64.powi(n as i32 - 1) - 1.0) * PI * t,
            sign_controlled_z: -n_points * PI * t,
            zz: (2..=n).map(|q| -(2f64.powi((n - q) as i32)) * PI * t).collect(),
        })
    }
}

/// Gate-level small-angle evolution `Σ_k e^{−it2kπZ₀} ⊗ |k⟩⟨k|`.
///
/// The sign-controlled phase uses `|1⟩⟨1| = (I − Z)/2`, giving
/// `Rz(θ/2)` on qubit 0 followed by `Rzz(−θ/2)` on `(0, 1)` with no
/// leftover global phase.
pub fn build_approx_diagonal(n: usize, t: f64) -> Result<Circuit> {
    let angles = DiagonalAngles::new(n, t)?;
    let mut c = Circuit::new(n + 1);
    c.push(Gate::Rz {
        qubit: 0,
        theta: angles.global_z,
    })?;
    let half = angles.sign_controlled_z / 2.0;
    c.push(Gate::Rz { qubit: 0, theta: half })?;
    c.push(Gate::Rzz {
        a: 0,
        b: 1,
        theta: -half,
    })?;
    for (q, &theta) in (2..=n).zip(&angles.zz) {
        c.push(Gate::Rzz { a: 0, b: q, theta })?;
    }
    Ok(c)
}

/// Native diagonal `e^{−itω(k)z₀}` on qubits `0..=n`, with `z₀ = ±1` the
/// Z eigenvalue of qubit 0 and `k` from the signed wavenumber map.
pub fn diagonal_from_dispersion(n: usize, t: f64, omega: impl Fn(i64) -> f64) -> Result<Gate> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one grid qubit".into()));
    }
    let map = SignedWavenumberMap::new(n);
    let n_points = map.n_points();
    let mut values = Vec::with_capacity(2 * n_points);
    for z0 in [1.0, -1.0] {
        for m in 0..n_points {
            values.push(Complex64::from_polar(1.0, -t * omega(map.wavenumber(m)) * z0));
        }
    }
    Ok(Gate::Diagonal {
        qubits: (0..=n).collect(),
        values,
    })
}

/// Exact evolution diagonal `e^{−it·2N sin(πk/N)·z₀}`.
pub fn build_exact_diagonal(n: usize, t: f64) -> Result<Gate> {
    let model = SpectralModel::new(1 << n.max(1));
    diagonal_from_dispersion(n, t, |k| model.omega(k))
}
