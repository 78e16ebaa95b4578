//! End-to-end acceptance checks. Runs as a plain binary so that every
//! criterion prints its own pass/fail line; exits nonzero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64;
use qwave::circuits::{
    assemble_evolution, build_approx_diagonal, build_evolution, build_qft, evolve_state, DiagonalMode, EvolutionSpec,
};
use qwave::compiler::{count, lower};
use qwave::fit::{loglog_slope, polyfit};
use qwave::prep::{
    optimize, ricker_target, BrickwallAnsatz, GridSpec, LbfgsConfig, OptimizerConfig, RickerParams, TrainResult,
};
use qwave::sim::dense::circuit_unitary;
use qwave::sim::{pure_infidelity, sample_bitstrings, state_infidelity, DensityMatrix, NoiseModel, StateVector};
use qwave::spectral::{exact_evolve, laplacian_matrix, relative_error, shots_for_relative_error};

type CMatrix = DMatrix<Complex64>;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn sci(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x:.2e}")).collect();
    format!("[{}]", parts.join(", "))
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ricker(n: usize) -> StateVector {
    ricker_target(&GridSpec::new(n).unwrap(), &RickerParams::default()).unwrap()
}

/// `F_{jk} = e^{2πi jk/N}/√N`, with `jk` reduced mod `N` before the angle.
fn fourier(n_points: usize) -> CMatrix {
    let norm = (n_points as f64).sqrt();
    CMatrix::from_fn(n_points, n_points, |j, k| {
        let e = (j * k) % n_points;
        Complex64::from_polar(1.0 / norm, 2.0 * PI * e as f64 / n_points as f64)
    })
}

/// Signed wavenumber of register index `m`.
fn wavenumber(m: usize, n_points: usize) -> i64 {
    if m < n_points / 2 {
        m as i64
    } else {
        m as i64 - n_points as i64
    }
}

fn alpha(k: i64, n_points: usize) -> f64 {
    let n = n_points as f64;
    2.0 * n * (PI * k as f64 / n).sin() - 2.0 * PI * k as f64
}

/// `|ĉ_k|²` of the wavefield part of a static state, by a direct sum.
fn fourier_weights(state: &StateVector) -> Vec<f64> {
    let n_points = state.dim() / 2;
    let psi = &state.amplitudes()[..n_points];
    (0..n_points)
        .map(|k| {
            let s: Complex64 = psi
                .iter()
                .enumerate()
                .map(|(j, a)| a * Complex64::from_polar(1.0, -2.0 * PI * ((j * k) % n_points) as f64 / n_points as f64))
                .sum();
            s.norm_sqr() / n_points as f64
        })
        .collect()
}

/// `(weight, signed α, signed k³)` over both sign sectors of a static state:
/// each carries half of `|ĉ_k|²` and rotates in the opposite direction.
fn sectors(w: &[f64]) -> Vec<(f64, f64, f64)> {
    let n_points = w.len();
    let mut out = Vec::with_capacity(2 * n_points);
    for s in [1.0, -1.0] {
        for (m, wk) in w.iter().enumerate() {
            let k = wavenumber(m, n_points);
            out.push((wk / 2.0, s * alpha(k, n_points), s * (k as f64).powi(3)));
        }
    }
    out
}

/// `1 − |Σ w e^{−itα}|²` written to avoid cancellation.
fn closed_form_infidelity(w: &[f64], t: f64) -> f64 {
    let (mut d, mut s) = (0.0, 0.0);
    for (wk, a, _) in sectors(w) {
        let x = t * a;
        d += wk * 2.0 * (x / 2.0).sin().powi(2);
        s += wk * x.sin();
    }
    d * (2.0 - d) - s * s
}

fn second_order(w: &[f64], t: f64) -> f64 {
    let sec = sectors(w);
    let mean: f64 = sec.iter().map(|(wk, a, _)| wk * a).sum();
    t * t * sec.iter().map(|(wk, a, _)| wk * (a - mean).powi(2)).sum::<f64>()
}

fn cubic_bound(w: &[f64], t: f64) -> f64 {
    let sec = sectors(w);
    let mean: f64 = sec.iter().map(|(wk, _, k3)| wk * k3).sum();
    let var: f64 = sec.iter().map(|(wk, _, k3)| wk * (k3 - mean).powi(2)).sum();
    t * t * PI.powi(6) / (9.0 * (w.len() as f64).powi(4)) * var
}

fn circuit_infidelity(n: usize, t: f64) -> f64 {
    let s = ricker(n);
    let exact = evolve_state(&s, &EvolutionSpec::new(n, t, DiagonalMode::Exact).unwrap()).unwrap();
    let approx = evolve_state(&s, &EvolutionSpec::new(n, t, DiagonalMode::SmallAngle).unwrap()).unwrap();
    pure_infidelity(&exact, &approx).unwrap()
}

fn laplacian_diagonalization() -> Verdict {
    let mut worst: f64 = 0.0;
    for n_points in 4..=256usize {
        let f = fourier(n_points);
        let lap = laplacian_matrix(n_points).map(c);
        let d = f.adjoint() * lap * &f;
        let n2 = (n_points * n_points) as f64;
        for r in 0..n_points {
            for col in 0..n_points {
                let expected = if r == col {
                    -4.0 * n2 * (PI * r as f64 / n_points as f64).sin().powi(2)
                } else {
                    0.0
                };
                worst = worst.max((d[(r, col)] - c(expected)).norm());
            }
        }
    }
    verdict(
        worst < 1e-8,
        format!("N = 4..256, max |F†ΔF − diag(E_k)| = {worst:.2e} (< 1e-8)"),
    )
}

fn circuit_algebra_equivalence() -> Verdict {
    let mut diag_err: f64 = 0.0;
    let ts = [0.137, 0.42, 0.733, 1.618, 2.9];
    for n in 2..=5 {
        let n_points = 1usize << n;
        for &t in &ts {
            let u = circuit_unitary(&build_approx_diagonal(n, t).unwrap());
            // k = 0, z₀ = +1 carries no phase, so entry 0 is the global phase.
            let phase = u[(0, 0)];
            for idx in 0..2 * n_points {
                let z0 = if idx < n_points { 1.0 } else { -1.0 };
                let k = wavenumber(idx % n_points, n_points) as f64;
                let expected = phase * Complex64::from_polar(1.0, -t * 2.0 * PI * k * z0);
                diag_err = diag_err.max((u[(idx, idx)] - expected).norm());
                for col in 0..2 * n_points {
                    if col != idx {
                        diag_err = diag_err.max(u[(idx, col)].norm());
                    }
                }
            }
        }
    }
    let mut qft_err: f64 = 0.0;
    for n in 1..=6 {
        let u = circuit_unitary(&build_qft(n).unwrap());
        let f = fourier(1 << n);
        qft_err = qft_err.max((u - f).iter().fold(0.0, |m, z| m.max(z.norm())));
    }
    verdict(
        diag_err < 1e-10 && qft_err < 1e-10,
        format!("small-angle diagonal vs closed form {diag_err:.2e}, QFT vs DFT {qft_err:.2e} (< 1e-10)"),
    )
}

fn integer_period() -> Verdict {
    let mut worst: f64 = 0.0;
    for n in 2..=8 {
        let s = ricker(n);
        let out = evolve_state(&s, &EvolutionSpec::new(n, 1.0, DiagonalMode::SmallAngle).unwrap()).unwrap();
        worst = worst.max(pure_infidelity(&s, &out).unwrap());
    }
    verdict(
        worst < 1e-10,
        format!("small-angle evolution at t = 1, n = 2..8: max infidelity {worst:.2e} (< 1e-10)"),
    )
}

fn scaling_with_grid() -> Verdict {
    let ns = [5usize, 6, 7, 8];
    let xs: Vec<f64> = ns.iter().map(|&n| (1usize << n) as f64).collect();
    let eps: Vec<f64> = ns.iter().map(|&n| circuit_infidelity(n, 1.0)).collect();
    let slope = loglog_slope(&xs, &eps);
    verdict(
        (slope + 4.0).abs() <= 0.3,
        format!(
            "noiseless t = 1, N = 32..256: slope {slope:.3} (−4 ± 0.3), ε = {}",
            sci(&eps)
        ),
    )
}

fn scaling_with_time() -> Verdict {
    let ts: Vec<f64> = (10..=100).map(|i| i as f64 * 0.01).collect();
    let mut slopes = Vec::new();
    for n in [6usize, 7] {
        let eps: Vec<f64> = ts.iter().map(|&t| circuit_infidelity(n, t)).collect();
        slopes.push(loglog_slope(&ts, &eps));
    }
    let pass = slopes.iter().all(|s| (s - 2.0).abs() <= 0.1);
    verdict(
        pass,
        format!(
            "t = 0.10..1.00 step 0.01, n = 6, 7: slopes {slopes:.4?} (2 ± 0.1), {} points each",
            ts.len()
        ),
    )
}

fn noise_tradeoff() -> Verdict {
    let ns: Vec<usize> = (4..=9).collect();
    let ps = [1e-5, 1e-4, 1e-3];
    let t = 1.0;
    let rows: Vec<Vec<f64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ps
            .iter()
            .map(|&p| {
                let ns = &ns;
                scope.spawn(move || {
                    ns.iter()
                        .map(|&n| {
                            let s = ricker(n);
                            let exact = exact_evolve(&s, t).unwrap();
                            let circuit =
                                build_evolution(&EvolutionSpec::new(n, t, DiagonalMode::SmallAngle).unwrap()).unwrap();
                            let mut rho = DensityMatrix::from_pure(&s);
                            rho.apply_circuit_noisy(&circuit, &NoiseModel::new(p).unwrap()).unwrap();
                            state_infidelity(&exact, &rho).unwrap()
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut pass = true;
    let mut parts = Vec::new();
    for (p, eps) in ps.iter().zip(&rows) {
        let argmin = eps
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap();
        let interior = argmin > 0 && argmin + 1 < eps.len();
        pass &= interior;
        parts.push(format!(
            "p={p:.0e}: argmin n={} ({})",
            ns[argmin],
            if interior { "interior" } else { "edge" }
        ));
    }
    verdict(pass, format!("t = 1, n = 4..9, {}", parts.join("; ")))
}

fn oracle_equivalence() -> Verdict {
    let ts = [0.05, 0.1, 0.2, 0.4, 0.8];
    let mut worst: f64 = 0.0;
    let mut bound_ok = true;
    for n in 2..=8 {
        let w = fourier_weights(&ricker(n));
        for &t in &ts {
            let eps = circuit_infidelity(n, t);
            worst = worst.max((eps - closed_form_infidelity(&w, t)).abs());
            bound_ok &= eps <= cubic_bound(&w, t) * (1.0 + 1e-12) + 1e-15;
        }
    }
    // Residual of the second-order form should shrink like t⁴.
    let small_t = [0.025, 0.05, 0.1, 0.2];
    let mut slopes = Vec::new();
    for n in [4usize, 5, 6] {
        let w = fourier_weights(&ricker(n));
        let resid: Vec<f64> = small_t
            .iter()
            .map(|&t| (closed_form_infidelity(&w, t) - second_order(&w, t)).abs())
            .collect();
        slopes.push(loglog_slope(&small_t, &resid));
    }
    let quartic = slopes.iter().all(|s| (s - 4.0).abs() < 0.5);
    verdict(
        worst < 1e-9 && quartic && bound_ok,
        format!(
            "n = 2..8: circuit vs closed form {worst:.2e} (< 1e-9); second-order residual slopes {slopes:.3?} (≈ 4); cubic bound {}",
            if bound_ok { "holds" } else { "VIOLATED" }
        ),
    )
}

fn shot_statistics() -> Verdict {
    let rel = relative_error(0.1, 1000);
    let big = shots_for_relative_error(0.1, rel);
    let small = shots_for_relative_error(0.005, rel);
    let ratio = small as f64 / big as f64;
    verdict(
        (rel - 0.095).abs() <= 0.01 && ratio >= 10.0,
        format!("ε_rel(0.1, 1000 shots) = {rel:.4}; p = 0.005 needs {small} shots vs {big} ({ratio:.1}×, ≥ 10×)"),
    )
}

fn prep_circuit(n: usize) -> qwave::sim::Circuit {
    let a = BrickwallAnsatz::new(n + 1).unwrap();
    a.to_circuit(&vec![0.5; a.num_params()]).unwrap()
}

fn gate_counts() -> Verdict {
    let ns: Vec<usize> = (4..=10).collect();
    let evo: Vec<f64> = ns
        .iter()
        .map(|&n| {
            let c = build_evolution(&EvolutionSpec::new(n, 1.0, DiagonalMode::SmallAngle).unwrap()).unwrap();
            count(&lower(&c).unwrap()).two_qubit as f64
        })
        .collect();
    let full: Vec<f64> = ns
        .iter()
        .map(|&n| {
            let spec = EvolutionSpec::new(n, 1.0, DiagonalMode::SmallAngle).unwrap();
            let c = assemble_evolution(&prep_circuit(n), &spec).unwrap();
            count(&lower(&c).unwrap()).two_qubit as f64
        })
        .collect();
    let x: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    let fit = polyfit(&x, &evo, 2);
    let full_fit = polyfit(&x, &full, 2);
    let n6 = full[2];
    let same_order = (n6 / 71.0).log10().abs() < 1.0;
    verdict(
        fit.r_squared > 0.999 && same_order,
        format!(
            "evolution-stage RZZ counts {evo:?}, quadratic R² = {:.6} (> 0.999); with brickwall prep {full:?}, R² = {:.4}; n = 6 full circuit {n6} vs 71",
            fit.r_squared, full_fit.r_squared
        ),
    )
}

const PREP_BUDGET: usize = 300;
const PREP_SEEDS: u64 = 3;
/// Long enough for the n = 6 ansatz to reach its expressivity floor.
const CONVERGED_BUDGET: usize = 5000;

fn train(n: usize, seed: u64) -> TrainResult {
    train_with_budget(n, seed, PREP_BUDGET)
}

fn train_with_budget(n: usize, seed: u64, budget: usize) -> TrainResult {
    let cfg = OptimizerConfig {
        seed,
        lbfgs: LbfgsConfig {
            max_iters: budget,
            ..LbfgsConfig::default()
        },
        ..OptimizerConfig::default()
    };
    optimize(&BrickwallAnsatz::new(n + 1).unwrap(), &ricker(n), &cfg).unwrap()
}

fn state_prep(trained: &[(usize, Vec<TrainResult>)]) -> Verdict {
    let mut all_ok = true;
    let mut means = Vec::new();
    for (_, runs) in trained {
        all_ok &= runs.iter().all(|r| r.infidelity <= 1e-2);
        means.push(runs.iter().map(|r| r.infidelity).sum::<f64>() / runs.len() as f64);
    }
    // Below 1e-10 runs have converged to rounding and are treated as equal.
    let floored: Vec<f64> = means.iter().map(|m| m.max(1e-10)).collect();
    let monotone = floored.windows(2).all(|w| w[1] >= w[0]);
    verdict(
        all_ok && monotone,
        format!(
            "{PREP_BUDGET} L-BFGS steps, seeds 0..{PREP_SEEDS}, n = 2..6: mean infidelity {}; all ≤ 1e-2: {all_ok}; non-decreasing: {monotone}",
            sci(&means)
        ),
    )
}

const SAMPLE_TIMES: [f64; 4] = [0.0, 0.3, 0.6, 0.9];

/// Grid points (over all panels) whose sampled wavefield probability lies
/// within two Monte Carlo errors of the exact curve, and the total.
fn sampled_agreement(states: &[StateVector], n: usize, shots: u64, seed: u64) -> (usize, usize) {
    let mut inside = 0;
    let mut total = 0;
    for (panel, (state, t)) in states.iter().zip(SAMPLE_TIMES).enumerate() {
        let hist = sample_bitstrings(state, shots, seed + panel as u64).unwrap();
        let exact = exact_evolve(&ricker(n), t).unwrap();
        for j in 0..1usize << n {
            let p = exact.amplitudes()[j].norm_sqr();
            let eps_mc = (p * (1.0 - p) / shots as f64).sqrt();
            let p_hat = hist.count(j) as f64 / shots as f64;
            inside += usize::from((p_hat - p).abs() <= 2.0 * eps_mc);
            total += 1;
        }
    }
    (inside, total)
}

fn sampled_wavefield(trained: &TrainResult) -> Verdict {
    let n = 6;
    let shots = 10_000;
    let seed = 2023;
    let prep = BrickwallAnsatz::new(n + 1)
        .unwrap()
        .to_circuit(&trained.params)
        .unwrap();
    let run = |mode: DiagonalMode, trained_prep: bool| -> f64 {
        let states: Vec<StateVector> = SAMPLE_TIMES
            .iter()
            .map(|&t| {
                let spec = EvolutionSpec::new(n, t, mode).unwrap();
                if trained_prep {
                    StateVector::zero(n + 1)
                        .evolved(&assemble_evolution(&prep, &spec).unwrap())
                        .unwrap()
                } else {
                    evolve_state(&ricker(n), &spec).unwrap()
                }
            })
            .collect();
        let (inside, total) = sampled_agreement(&states, n, shots, seed);
        inside as f64 / total as f64
    };
    let frac = run(DiagonalMode::SmallAngle, true);
    verdict(
        frac >= 0.95,
        format!(
            "n = 6, t = 0/0.3/0.6/0.9, {shots} shots, trained prep (infidelity {:.2e}) + small-angle diagonal: {:.1}% of 256 grid points within ±2ε_mc (≥ 95%); for reference, exact prep + small-angle {:.1}%, trained prep + exact diagonal {:.1}%, exact prep + exact diagonal {:.1}%",
            trained.infidelity,
            100.0 * frac,
            100.0 * run(DiagonalMode::SmallAngle, false),
            100.0 * run(DiagonalMode::Exact, true),
            100.0 * run(DiagonalMode::Exact, false),
        ),
    )
}

type Check<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn main() -> ExitCode {
    let start = Instant::now();
    let trained: Vec<(usize, Vec<TrainResult>)> = (2..=6)
        .map(|n| (n, (0..PREP_SEEDS).map(|seed| train(n, seed)).collect()))
        .collect();
    let n6 = train_with_budget(6, 0, CONVERGED_BUDGET);

    let checks: Vec<Check> = vec![
        ("laplacian diagonalization", Box::new(laplacian_diagonalization)),
        ("circuit/algebra equivalence", Box::new(circuit_algebra_equivalence)),
        ("integer-period identity", Box::new(integer_period)),
        ("infidelity vs grid size", Box::new(scaling_with_grid)),
        ("infidelity vs time", Box::new(scaling_with_time)),
        ("noise trade-off", Box::new(noise_tradeoff)),
        ("analytic infidelity oracle", Box::new(oracle_equivalence)),
        ("shot statistics", Box::new(shot_statistics)),
        ("gate-count scaling", Box::new(gate_counts)),
        ("state preparation", Box::new(|| state_prep(&trained))),
        ("sampled wavefield", Box::new(|| sampled_wavefield(&n6))),
    ];
    let mut failures = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let t0 = Instant::now();
        let v = check();
        failures += usize::from(!v.pass);
        println!(
            "criterion {:>2} [{}] {name}: {} ({:.1}s)",
            i + 1,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            t0.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        checks.len() - failures,
        checks.len(),
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
