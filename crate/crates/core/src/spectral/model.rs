use std::f64::consts::PI;

/// Spectrum of the periodic discrete Laplacian on `N` points with `a = 1/N`.
///
/// Wavenumbers run over `k ∈ {−N/2, …, N/2 − 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralModel {
    n_points: usize,
}

impl SpectralModel {
    pub fn new(n_points: usize) -> Self {
        assert!(n_points >= 2 && n_points.is_multiple_of(2), "N must be even and ≥ 2");
        SpectralModel { n_points }
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn wavenumbers(&self) -> impl Iterator<Item = i64> {
        let half = (self.n_points / 2) as i64;
        -half..half
    }

    /// `E_k = −4N² sin²(πk/N)`.
    pub fn eigenvalue(&self, k: i64) -> f64 {
        let w = self.omega(k);
        -w * w
    }

    /// Exact frequency `ω_k = 2N sin(πk/N)`, signed like `k`.
    pub fn omega(&self, k: i64) -> f64 {
        let n = self.n_points as f64;
        2.0 * n * (PI * k as f64 / n).sin()
    }

    /// Linearized frequency `2πk`.
    pub fn omega_small_angle(&self, k: i64) -> f64 {
        2.0 * PI * k as f64
    }

    /// Dispersion gap `α(k) = 2N sin(kπ/N) − 2kπ`.
    pub fn alpha(&self, k: i64) -> f64 {
        self.omega(k) - self.omega_small_angle(k)
    }

    /// Leading Taylor magnitude `π³|k|³/(3N²)`, an upper bound on `|α(k)|`.
    pub fn alpha_bound(&self, k: i64) -> f64 {
        let n = self.n_points as f64;
        PI.powi(3) * (k.abs() as f64).powi(3) / (3.0 * n * n)
    }
}
