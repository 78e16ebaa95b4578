//! Least-squares fits used by the scaling analyses.

use nalgebra::{DMatrix, DVector};

/// Result of a polynomial least-squares fit.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFit {
    /// Coefficients, highest degree first.
    pub coefficients: Vec<f64>,
    pub r_squared: f64,
    pub residuals: Vec<f64>,
}

impl PolyFit {
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().fold(0.0, |acc, c| acc * x + c)
    }

    /// Slope of a degree-1 fit.
    pub fn slope(&self) -> f64 {
        self.coefficients[self.coefficients.len() - 2]
    }
}

/// Fit a polynomial of `degree` to `(x, y)`.
pub fn polyfit(x: &[f64], y: &[f64], degree: usize) -> PolyFit {
    assert_eq!(x.len(), y.len());
    assert!(x.len() > degree, "need more points than the degree");
    let design = DMatrix::from_fn(x.len(), degree + 1, |r, c| x[r].powi((degree - c) as i32));
    let rhs = DVector::from_column_slice(y);
    let coefficients: Vec<f64> = design
        .clone()
        .svd(true, true)
        .solve(&rhs, 1e-14)
        .expect("SVD with both factors")
        .iter()
        .copied()
        .collect();
    let fit = PolyFit {
        coefficients,
        r_squared: 0.0,
        residuals: Vec::new(),
    };
    let residuals: Vec<f64> = x.iter().zip(y).map(|(&xi, &yi)| yi - fit.eval(xi)).collect();
    let mean = y.iter().sum::<f64>() / y.len() as f64;
    let ss_tot: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
    let ss_res: f64 = residuals.iter().map(|r| r * r).sum();
    PolyFit {
        r_squared: if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 },
        residuals,
        ..fit
    }
}

/// Slope of `log y` against `log x` (any common base).
pub fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    polyfit(&lx, &ly, 1).slope()
}
