use std::f64::consts::PI;

use num_complex::Complex64;

use crate::sim::dense::CMatrix;

/// Transform direction. `Forward` has kernel `e^{+i2πkj/N}/√N`, matching
/// the plane-wave columns of the QFT; `Inverse` is its adjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Inverse => -1.0,
        }
    }
}

/// Direct O(N²) unitary DFT. Deliberately not an FFT.
pub fn dft(input: &[Complex64], direction: Direction) -> Vec<Complex64> {
    let n = input.len();
    let norm = 1.0 / (n as f64).sqrt();
    let twiddles = twiddle_table(n, direction);
    (0..n)
        .map(|j| {
            input
                .iter()
                .enumerate()
                .map(|(k, x)| twiddles[(j * k) % n] * x)
                .sum::<Complex64>()
                * norm
        })
        .collect()
}

/// Dense DFT matrix, entry `(j, k) = e^{±i2πjk/N}/√N`.
pub fn dft_matrix(n: usize, direction: Direction) -> CMatrix {
    let norm = 1.0 / (n as f64).sqrt();
    let twiddles = twiddle_table(n, direction);
    CMatrix::from_fn(n, n, |j, k| twiddles[(j * k) % n] * norm)
}

fn twiddle_table(n: usize, direction: Direction) -> Vec<Complex64> {
    (0..n)
        .map(|r| Complex64::from_polar(1.0, direction.sign() * 2.0 * PI * r as f64 / n as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_vector_maps_to_zero_mode() {
        let n = 16;
        let v = vec![Complex64::new(1.0 / (n as f64).sqrt(), 0.0); n];
        let out = dft(&v, Direction::Inverse);
        assert!((out[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(out[1..].iter().all(|c| c.norm() < 1e-12));
    }

    #[test]
    fn forward_then_inverse_is_identity() {
        let v: Vec<Complex64> = (0..32)
            .map(|i| Complex64::new((i as f64 * 0.37).sin(), (i as f64 * 1.3).cos()))
            .collect();
        let back = dft(&dft(&v, Direction::Forward), Direction::Inverse);
        for (a, b) in v.iter().zip(&back) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn matrix_agrees_with_vector_form() {
        let n = 8;
        let v: Vec<Complex64> = (0..n).map(|i| Complex64::new(i as f64, 1.0)).collect();
        let m = dft_matrix(n, Direction::Forward);
        let via_matrix = &m * nalgebra::DVector::from_vec(v.clone());
        let direct = dft(&v, Direction::Forward);
        for (a, b) in via_matrix.iter().zip(&direct) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
