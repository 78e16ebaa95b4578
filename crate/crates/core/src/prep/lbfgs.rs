//! Limited-memory BFGS with a strong-Wolfe line search.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LbfgsConfig {
    pub max_iters: usize,
    pub history: usize,
    /// Sufficient-decrease constant.
    pub c1: f64,
    /// Curvature constant.
    pub c2: f64,
    /// Stop when `‖∇f‖∞` drops below this.
    pub grad_tol: f64,
    /// Stop when an accepted step lowers `f` by less than this.
    pub cost_tol: f64,
    pub max_line_search: usize,
}

impl Default for LbfgsConfig {
    fn default() -> Self {
        LbfgsConfig {
            max_iters: 500,
            history: 10,
            c1: 1e-4,
            c2: 0.9,
            grad_tol: 1e-9,
            cost_tol: 1e-13,
            max_line_search: 25,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LbfgsOutcome {
    pub x: Vec<f64>,
    pub f: f64,
    /// `f` at the start point and after every accepted step.
    pub history: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn inf_norm(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}

#[derive(Debug, Clone)]
struct Point {
    alpha: f64,
    f: f64,
    slope: f64,
    x: Vec<f64>,
    g: Vec<f64>,
}

/// Minimize `objective`, which returns the value and gradient at a point.
pub fn minimize<F>(mut objective: F, x0: Vec<f64>, cfg: &LbfgsConfig) -> Result<LbfgsOutcome>
where
    F: FnMut(&[f64]) -> Result<(f64, Vec<f64>)>,
{
    let (mut f, mut g) = objective(&x0)?;
    if !f.is_finite() || g.iter().any(|v| !v.is_finite()) {
        return Err(Error::Diverged { iteration: 0, cost: f });
    }
    let mut x = x0;
    let mut history = vec![f];
    let mut memory: VecDeque<(Vec<f64>, Vec<f64>, f64)> = VecDeque::with_capacity(cfg.history);
    if inf_norm(&g) < cfg.grad_tol {
        return Ok(LbfgsOutcome {
            x,
            f,
            history,
            iterations: 0,
            converged: true,
        });
    }

    let mut converged = false;
    let mut iterations = 0;
    let mut retried = false;
    while iterations < cfg.max_iters {
        let mut d = direction(&g, &memory);
        let mut slope = dot(&g, &d);
        if slope >= 0.0 {
            memory.clear();
            d = g.iter().map(|v| -v).collect();
            slope = -dot(&g, &g);
        }
        let alpha0 = if memory.is_empty() {
            (1.0 / g.iter().map(|v| v.abs()).sum::<f64>()).min(1.0)
        } else {
            1.0
        };
        let start = Point {
            alpha: 0.0,
            f,
            slope,
            x: x.clone(),
            g: g.clone(),
        };
        let Some(next) = line_search(&mut objective, &start, &d, alpha0, cfg, iterations + 1)? else {
            if memory.is_empty() || retried {
                break;
            }
            // Stale curvature pairs; retry once along steepest descent.
            memory.clear();
            retried = true;
            continue;
        };
        retried = false;
        iterations += 1;

        let s: Vec<f64> = next.x.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = next.g.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 * dot(&y, &y).sqrt() * dot(&s, &s).sqrt() {
            if memory.len() == cfg.history {
                memory.pop_front();
            }
            memory.push_back((s, y, 1.0 / sy));
        }
        let decrease = f - next.f;
        x = next.x;
        f = next.f;
        g = next.g;
        history.push(f);
        if inf_norm(&g) < cfg.grad_tol || decrease < cfg.cost_tol {
            converged = true;
            break;
        }
    }
    Ok(LbfgsOutcome {
        x,
        f,
        history,
        iterations,
        converged,
    })
}

/// Two-loop recursion for `−H∇f`.
fn direction(g: &[f64], memory: &VecDeque<(Vec<f64>, Vec<f64>, f64)>) -> Vec<f64> {
    let mut q: Vec<f64> = g.to_vec();
    let mut alphas = Vec::with_capacity(memory.len());
    for (s, y, rho) in memory.iter().rev() {
        let a = rho * dot(s, &q);
        for (qi, yi) in q.iter_mut().zip(y) {
            *qi -= a * yi;
        }
        alphas.push(a);
    }
    if let Some((s, y, _)) = memory.back() {
        let gamma = dot(s, y) / dot(y, y);
        for qi in q.iter_mut() {
            *qi *= gamma;
        }
    }
    for ((s, y, rho), a) in memory.iter().zip(alphas.iter().rev()) {
        let b = rho * dot(y, &q);
        for (qi, si) in q.iter_mut().zip(s) {
            *qi += (a - b) * si;
        }
    }
    q.iter().map(|v| -v).collect()
}

fn evaluate<F>(objective: &mut F, start: &Point, d: &[f64], alpha: f64, iteration: usize) -> Result<Point>
where
    F: FnMut(&[f64]) -> Result<(f64, Vec<f64>)>,
{
    let x: Vec<f64> = start.x.iter().zip(d).map(|(xi, di)| xi + alpha * di).collect();
    let (f, g) = objective(&x)?;
    if f.is_nan() || g.iter().any(|v| v.is_nan()) {
        return Err(Error::Diverged { iteration, cost: f });
    }
    Ok(Point {
        alpha,
        f,
        slope: dot(&g, d),
        x,
        g,
    })
}

/// Minimizer of the cubic through `(a, fa, da)` and `(b, fb, db)`, kept inside
/// the bracket; falls back to bisection.
fn cubic_step(a: &Point, b: &Point) -> f64 {
    let (lo, hi) = if a.alpha <= b.alpha { (a, b) } else { (b, a) };
    let d1 = lo.slope + hi.slope - 3.0 * (lo.f - hi.f) / (lo.alpha - hi.alpha);
    let disc = d1 * d1 - lo.slope * hi.slope;
    let mid = 0.5 * (lo.alpha + hi.alpha);
    if disc < 0.0 || !disc.is_finite() {
        return mid;
    }
    let d2 = disc.sqrt();
    let step = hi.alpha - (hi.alpha - lo.alpha) * (hi.slope + d2 - d1) / (hi.slope - lo.slope + 2.0 * d2);
    let width = hi.alpha - lo.alpha;
    if !step.is_finite() || step < lo.alpha + 0.1 * width || step > hi.alpha - 0.1 * width {
        mid
    } else {
        step
    }
}

fn line_search<F>(
    objective: &mut F,
    start: &Point,
    d: &[f64],
    alpha0: f64,
    cfg: &LbfgsConfig,
    iteration: usize,
) -> Result<Option<Point>>
where
    F: FnMut(&[f64]) -> Result<(f64, Vec<f64>)>,
{
    let armijo = |p: &Point| p.f <= start.f + cfg.c1 * p.alpha * start.slope;
    let curvature = |p: &Point| p.slope.abs() <= -cfg.c2 * start.slope;

    let mut prev = start.clone();
    let mut alpha = alpha0;
    let mut evals = 0;
    let (mut lo, mut hi) = loop {
        if evals >= cfg.max_line_search {
            return Ok(None);
        }
        let p = evaluate(objective, start, d, alpha, iteration)?;
        evals += 1;
        if !p.f.is_finite() {
            // Overshot into a non-finite region; shrink.
            alpha *= 0.5;
            continue;
        }
        if !armijo(&p) || (evals > 1 && p.f >= prev.f) {
            break (prev, p);
        }
        if curvature(&p) {
            return Ok(Some(p));
        }
        if p.slope >= 0.0 {
            break (p, prev);
        }
        alpha = 2.0 * p.alpha;
        prev = p;
    };

    // Zoom: `lo` satisfies sufficient decrease and has the lowest value so far.
    while evals < cfg.max_line_search {
        let alpha = cubic_step(&lo, &hi);
        if (hi.alpha - lo.alpha).abs() < 1e-16 * lo.alpha.abs().max(1.0) {
            break;
        }
        let p = evaluate(objective, start, d, alpha, iteration)?;
        evals += 1;
        if !armijo(&p) || p.f >= lo.f {
            hi = p;
        } else {
            if curvature(&p) {
                return Ok(Some(p));
            }
            if p.slope * (hi.alpha - lo.alpha) >= 0.0 {
                hi = lo;
            }
            lo = p;
        }
    }
    Ok((lo.alpha > 0.0 && lo.f < start.f).then_some(lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rosenbrock(x: &[f64]) -> Result<(f64, Vec<f64>)> {
        let (a, b) = (x[0], x[1]);
        let f = (1.0 - a).powi(2) + 100.0 * (b - a * a).powi(2);
        let g = vec![-2.0 * (1.0 - a) - 400.0 * a * (b - a * a), 200.0 * (b - a * a)];
        Ok((f, g))
    }

    #[test]
    fn solves_rosenbrock() {
        let out = minimize(rosenbrock, vec![-1.2, 1.0], &LbfgsConfig::default()).unwrap();
        assert!(out.converged);
        assert!(
            (out.x[0] - 1.0).abs() < 1e-6 && (out.x[1] - 1.0).abs() < 1e-6,
            "{:?}",
            out.x
        );
        assert!(out.history.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn quadratic_in_few_steps() {
        let diag = [1.0, 10.0, 100.0, 1000.0];
        let quad = |x: &[f64]| -> Result<(f64, Vec<f64>)> {
            let f = x.iter().zip(&diag).map(|(v, d)| 0.5 * d * v * v).sum();
            Ok((f, x.iter().zip(&diag).map(|(v, d)| d * v).collect()))
        };
        let out = minimize(quad, vec![1.0; 4], &LbfgsConfig::default()).unwrap();
        assert!(out.f < 1e-16);
        assert!(out.iterations < 30, "{}", out.iterations);
    }

    #[test]
    fn stationary_start_returns_immediately() {
        let out = minimize(
            |x| Ok((x[0] * x[0], vec![2.0 * x[0]])),
            vec![0.0],
            &LbfgsConfig::default(),
        )
        .unwrap();
        assert_eq!(out.iterations, 0);
        assert_eq!(out.history, vec![0.0]);
    }

    #[test]
    fn nan_is_reported() {
        let err = minimize(|_| Ok((f64::NAN, vec![0.0])), vec![1.0], &LbfgsConfig::default()).unwrap_err();
        assert!(matches!(err, Error::Diverged { iteration: 0, .. }));
        let err = minimize(
            |x| Ok((if x[0] < 1.0 { f64::NAN } else { x[0] }, vec![1.0])),
            vec![1.0],
            &LbfgsConfig::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Diverged { iteration: 1, .. }));
    }
}
