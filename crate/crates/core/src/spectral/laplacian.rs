use nalgebra::DMatrix;

/// Periodic central-difference Laplacian on `n_points` points of `[0, 1)`:
/// rows `[… 1, −2, 1 …]/a²` with `a = 1/n_points` and `j + N ≡ j`.
pub fn laplacian_matrix(n_points: usize) -> DMatrix<f64> {
    assert!(n_points >= 2, "need at least two grid points");
    let inv_a2 = (n_points * n_points) as f64;
    let mut m = DMatrix::zeros(n_points, n_points);
    for j in 0..n_points {
        m[(j, j)] -= 2.0 * inv_a2;
        m[(j, (j + 1) % n_points)] += inv_a2;
        m[(j, (j + n_points - 1) % n_points)] += inv_a2;
    }
    m
}
