use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use qwave::circuits::{assemble_evolution, build_evolution, DiagonalMode, EvolutionSpec};
use qwave::compiler::{count, lower};
use qwave::fit::{loglog_slope, polyfit};
use qwave::prep::{
    optimize, ricker_target, BrickwallAnsatz, Checkpoint, GridSpec, LbfgsConfig, OptimizerConfig, RickerParams,
};
use qwave::sim::{sample_bitstrings, state_infidelity, Circuit, DensityMatrix, NoiseModel, StateVector};
use qwave::spectral::{
    exact_evolve, infidelity_model, mc_error, mc_errors, relative_error, AnalysisRow, FourierAmplitudes,
};

use crate::config::{Mode, PrepSource, RunArgs, Span};
use crate::svg::{Chart, Series};

/// Largest register simulated as a density matrix.
const MAX_DENSITY_QUBITS: usize = 11;

fn target(n: usize) -> Result<StateVector> {
    Ok(ricker_target(&GridSpec::new(n)?, &RickerParams::default())?)
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating output directory {}", dir.display()))
}

fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_svg(args: &RunArgs, path: &Path, chart: &Chart) -> Result<()> {
    if args.no_svg {
        return Ok(());
    }
    fs::write(path, chart.render()).with_context(|| format!("writing {}", path.display()))
}

/// The initial state and the circuit that follows it.
///
/// Exact prep injects the Ricker state and runs only the evolution stage; trained
/// prep starts from |0…0⟩ and runs the checkpointed ansatz first.
struct Program {
    initial: StateVector,
    circuit: Circuit,
}

fn load_prep(args: &RunArgs, n: usize) -> Result<Circuit> {
    let path = args.checkpoint_path(n);
    let ckpt = Checkpoint::load(&path)
        .with_context(|| {
            format!(
                "missing checkpoint {} (run `qwave train --n {n}` first)",
                path.display()
            )
        })?
        .with_context(|| format!("reading checkpoint {}", path.display()))?;
    if ckpt.n != n {
        bail!("checkpoint {} is for n = {}, not n = {n}", path.display(), ckpt.n);
    }
    Ok(ckpt.circuit()?)
}

fn program(prep: Option<&Circuit>, n: usize, t: f64, mode: DiagonalMode) -> Result<Program> {
    let spec = EvolutionSpec::new(n, t, mode)?;
    Ok(match prep {
        Some(prep) => Program {
            initial: StateVector::zero(n + 1),
            circuit: assemble_evolution(prep, &spec)?,
        },
        None => Program {
            initial: target(n)?,
            circuit: assemble_evolution(&Circuit::new(n + 1), &spec)?,
        },
    })
}

/// Born probabilities of the program output, plus its infidelity to `reference`.
fn run(prog: &Program, p: f64, reference: &StateVector) -> Result<(Vec<f64>, f64)> {
    if p > 0.0 {
        let m = prog.initial.num_qubits();
        if m > MAX_DENSITY_QUBITS {
            bail!("noisy simulation is limited to {MAX_DENSITY_QUBITS} qubits, got {m}");
        }
        let mut rho = DensityMatrix::from_pure(&prog.initial);
        rho.apply_circuit_noisy(&prog.circuit, &NoiseModel::new(p)?)?;
        Ok((rho.probabilities(), state_infidelity(reference, &rho)?))
    } else {
        let psi = prog.initial.clone().evolved(&prog.circuit)?;
        let eps = qwave::sim::pure_infidelity(reference, &psi)?;
        Ok((psi.probabilities(), eps))
    }
}

fn prep_circuit(args: &RunArgs, n: usize) -> Result<Option<Circuit>> {
    match args.prep.unwrap_or(PrepSource::Exact) {
        PrepSource::Exact => Ok(None),
        PrepSource::Trained => load_prep(args, n).map(Some),
    }
}

fn mode(args: &RunArgs) -> DiagonalMode {
    args.mode.unwrap_or(Mode::Approx).into()
}

fn single_n(args: &RunArgs, default: usize) -> Result<usize> {
    if args.n_range.is_some() {
        bail!("this command takes a single --n, not --n-range");
    }
    Ok(args.n.unwrap_or(default))
}

#[derive(Serialize)]
struct HistoryRow {
    iteration: usize,
    cost: f64,
}

pub fn train(args: &RunArgs) -> Result<()> {
    let n = single_n(args, 4)?;
    let out = args.out_dir();
    ensure_dir(&out)?;
    let ansatz = BrickwallAnsatz::new(n + 1)?;
    let cfg = OptimizerConfig {
        seed: args.seed(),
        restarts: args.restarts.unwrap_or(1).max(1),
        lbfgs: LbfgsConfig {
            max_iters: args.iters.unwrap_or(300),
            ..LbfgsConfig::default()
        },
        ..OptimizerConfig::default()
    };
    let result = optimize(&ansatz, &target(n)?, &cfg)?;
    let ckpt = Checkpoint {
        n,
        depth: ansatz.depth(),
        seed: cfg.seed,
        params: result.params.clone(),
        infidelity: result.infidelity,
    };
    let path = args.checkpoint_path(n);
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        ensure_dir(parent)?;
    }
    ckpt.save(&path)
        .with_context(|| format!("writing {}", path.display()))?;
    let history: Vec<HistoryRow> = result
        .history
        .iter()
        .enumerate()
        .map(|(iteration, &cost)| HistoryRow { iteration, cost })
        .collect();
    write_csv(&out.join(format!("prep_n{n}_history.csv")), &history)?;
    let chart = Chart {
        title: format!("Ricker state preparation, n = {n}"),
        x_label: "iteration".into(),
        y_label: "cost".into(),
        log_y: true,
        series: vec![Series::new(
            "cost",
            history.iter().map(|h| (h.iteration as f64, h.cost)).collect(),
        )],
        ..Chart::default()
    };
    write_svg(args, &out.join(format!("prep_n{n}_history.svg")), &chart)?;
    println!(
        "n = {n}: infidelity {:.6e} after {} iterations (restart {}, {}), checkpoint {}",
        result.infidelity,
        result.iterations,
        result.restart,
        if result.converged {
            "converged"
        } else {
            "budget reached"
        },
        path.display()
    );
    Ok(())
}

#[derive(Serialize)]
struct WaveRow {
    t: f64,
    j: usize,
    x: f64,
    psi2_exact: f64,
    psi2_simulated: f64,
    psi2_sampled: Option<f64>,
    eps_mc: Option<f64>,
}

pub fn evolve(args: &RunArgs) -> Result<()> {
    let n = single_n(args, 4)?;
    let times = args.times(&[0.5])?;
    let ps = args.noise_levels(&[0.0])?;
    let [p] = ps[..] else {
        bail!("evolve takes a single --p");
    };
    let shots = match args.shots.as_ref().map(|s| s.0.as_slice()) {
        None | Some([]) => None,
        Some(&[s]) if s > 0 => Some(s),
        Some(&[_]) => bail!("--shots must be positive"),
        Some(_) => bail!("evolve takes a single --shots"),
    };
    let out = args.out_dir();
    ensure_dir(&out)?;
    let prep = prep_circuit(args, n)?;
    let mode = mode(args);
    let grid = GridSpec::new(n)?;
    let xs: Vec<f64> = grid.positions().collect();
    let initial = target(n)?;

    let panels: Vec<Vec<WaveRow>> = times
        .par_iter()
        .enumerate()
        .map(|(i, &t)| -> Result<Vec<WaveRow>> {
            let exact = exact_evolve(&initial, t)?;
            let prog = program(prep.as_ref(), n, t, mode)?;
            let (probs, _) = run(&prog, p, &exact)?;
            let sampled = match shots {
                Some(s) => {
                    let dist = ProbabilityVector(probs.clone(), n + 1);
                    let hist = sample_bitstrings(&dist, s, args.seed().wrapping_add(i as u64))?;
                    Some(mc_errors(&hist)?)
                }
                None => None,
            };
            let exact_p = exact.probabilities();
            Ok((0..grid.n_points())
                .map(|j| WaveRow {
                    t,
                    j,
                    x: xs[j],
                    psi2_exact: exact_p[j],
                    psi2_simulated: probs[j],
                    psi2_sampled: sampled.as_ref().map(|m| m[j].mean),
                    eps_mc: sampled.as_ref().map(|m| m[j].eps_mc),
                })
                .collect())
        })
        .collect::<Result<_>>()?;

    let rows: Vec<&WaveRow> = panels.iter().flatten().collect();
    write_csv(&out.join(format!("evolve_n{n}.csv")), &rows)?;
    for (i, panel) in panels.iter().enumerate() {
        let t = times[i];
        let mut series = vec![
            Series::new("exact", panel.iter().map(|r| (r.x, r.psi2_exact)).collect()),
            Series {
                dashed: true,
                ..Series::new("simulated", panel.iter().map(|r| (r.x, r.psi2_simulated)).collect())
            },
        ];
        if shots.is_some() {
            series.push(Series {
                errors: Some(panel.iter().map(|r| r.eps_mc.unwrap_or(0.0)).collect()),
                ..Series::new(
                    "sampled",
                    panel.iter().map(|r| (r.x, r.psi2_sampled.unwrap_or(0.0))).collect(),
                )
            });
        }
        let chart = Chart {
            title: format!("|psi|^2 at t = {t}, n = {n}, p = {p}"),
            x_label: "x".into(),
            y_label: "|psi|^2".into(),
            series,
            ..Chart::default()
        };
        write_svg(args, &out.join(format!("evolve_n{n}_{i}.svg")), &chart)?;
    }
    println!(
        "wrote {} rows to {}",
        rows.len(),
        out.join(format!("evolve_n{n}.csv")).display()
    );
    Ok(())
}

/// Born probabilities already in hand, for sampling.
struct ProbabilityVector(Vec<f64>, usize);

impl qwave::sim::BornDistribution for ProbabilityVector {
    fn num_qubits(&self) -> usize {
        self.1
    }

    fn born_probabilities(&self) -> Vec<f64> {
        self.0.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    #[value(name = "N", alias = "n")]
    N,
    T,
    P,
    Shots,
}

/// One fitted curve of a sweep. The swept coordinate is left blank.
#[derive(Serialize)]
struct FitRow {
    axis: &'static str,
    n: Option<usize>,
    t: Option<f64>,
    p: Option<f64>,
    slope: f64,
    argmin: f64,
    min_epsilon: f64,
}

fn analysis_row(args: &RunArgs, prep: Option<&Circuit>, n: usize, t: f64, p: f64) -> Result<AnalysisRow> {
    let mode = mode(args);
    let prog = program(prep, n, t, mode)?;
    // The oracle shares the prep, so ε isolates the evolution stage.
    let (reference, amps) = match prep {
        None => {
            let s = target(n)?;
            (exact_evolve(&s, t)?, FourierAmplitudes::from_state(&s))
        }
        Some(prep) => {
            let exact_prog = program(Some(prep), n, t, DiagonalMode::Exact)?;
            let prepared = StateVector::zero(n + 1).evolved(prep)?;
            (
                exact_prog.initial.evolved(&exact_prog.circuit)?,
                FourierAmplitudes::from_state(&prepared),
            )
        }
    };
    let (_, epsilon) = run(&prog, p, &reference)?;
    let model = infidelity_model(&amps, t)?;
    Ok(AnalysisRow {
        n,
        n_points: 1 << n,
        t,
        p,
        epsilon,
        epsilon_model: model.exact,
        bound: model.bound,
    })
}

fn argmin(points: &[(f64, f64)]) -> (f64, f64) {
    points
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap_or((f64::NAN, f64::NAN))
}

/// Log-log slope over the strictly positive points.
fn positive_slope(points: &[(f64, f64)]) -> f64 {
    let (x, y): (Vec<f64>, Vec<f64>) = points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).copied().unzip();
    if x.len() < 2 {
        f64::NAN
    } else {
        loglog_slope(&x, &y)
    }
}

pub fn sweep(args: &RunArgs, axis: Axis) -> Result<()> {
    let out = args.out_dir();
    ensure_dir(&out)?;
    match axis {
        Axis::N | Axis::P => sweep_grid(args, axis, &out),
        Axis::T => sweep_time(args, &out),
        Axis::Shots => sweep_shots(args, &out),
    }
}

/// Grid size against noise level. Both axes share the same rows; fits are per `p`.
fn sweep_grid(args: &RunArgs, axis: Axis, out: &Path) -> Result<()> {
    let (default_ns, default_ps): (Span, &[f64]) = match axis {
        Axis::P => (Span { lo: 4, hi: 9 }, &[1e-5, 1e-4, 1e-3]),
        _ => (Span { lo: 5, hi: 8 }, &[0.0]),
    };
    let ns = args.n_values(default_ns);
    let ps = args.noise_levels(default_ps)?;
    let ts = args.times(&[1.0])?;
    let [t] = ts[..] else {
        bail!("this sweep takes a single --t");
    };
    let preps: Vec<Option<Circuit>> = ns.iter().map(|&n| prep_circuit(args, n)).collect::<Result<_>>()?;
    let jobs: Vec<(usize, f64)> = ps.iter().flat_map(|&p| (0..ns.len()).map(move |i| (i, p))).collect();
    let rows: Vec<AnalysisRow> = jobs
        .par_iter()
        .map(|&(i, p)| analysis_row(args, preps[i].as_ref(), ns[i], t, p))
        .collect::<Result<_>>()?;

    let name = if axis == Axis::P { "p" } else { "N" };
    let mut fits = Vec::new();
    let mut series = Vec::new();
    for &p in &ps {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.p == p)
            .map(|r| (r.n_points as f64, r.epsilon))
            .collect();
        let (best_n, best) = argmin(&pts);
        fits.push(FitRow {
            axis: name,
            n: None,
            t: Some(t),
            p: Some(p),
            slope: positive_slope(&pts),
            argmin: best_n,
            min_epsilon: best,
        });
        series.push(Series::new(format!("p = {p:e}"), pts));
    }
    if ps.iter().all(|&p| p == 0.0) {
        series.push(Series {
            dashed: true,
            ..Series::new("bound", rows.iter().map(|r| (r.n_points as f64, r.bound)).collect())
        });
    }
    finish_sweep(
        args,
        out,
        name,
        &rows,
        &fits,
        Chart {
            title: format!("infidelity against grid size, t = {t}"),
            x_label: "N".into(),
            y_label: "infidelity".into(),
            log_x: true,
            log_y: true,
            series,
        },
    )
}

fn sweep_time(args: &RunArgs, out: &Path) -> Result<()> {
    let ns = args.n_values(Span { lo: 7, hi: 7 });
    let ps = args.noise_levels(&[0.0])?;
    let default_ts: Vec<f64> = (1..=10).map(|i| i as f64 / 10.0).collect();
    let ts = args.times(&default_ts)?;
    let preps: Vec<Option<Circuit>> = ns.iter().map(|&n| prep_circuit(args, n)).collect::<Result<_>>()?;
    let mut jobs = Vec::new();
    for i in 0..ns.len() {
        for &p in &ps {
            jobs.extend(ts.iter().map(|&t| (i, p, t)));
        }
    }
    let rows: Vec<AnalysisRow> = jobs
        .par_iter()
        .map(|&(i, p, t)| analysis_row(args, preps[i].as_ref(), ns[i], t, p))
        .collect::<Result<_>>()?;

    let mut fits = Vec::new();
    let mut series = Vec::new();
    for &n in &ns {
        for &p in &ps {
            let pts: Vec<(f64, f64)> = rows
                .iter()
                .filter(|r| r.n == n && r.p == p)
                .map(|r| (r.t, r.epsilon))
                .collect();
            let (best_t, best) = argmin(&pts);
            fits.push(FitRow {
                axis: "t",
                n: Some(n),
                t: None,
                p: Some(p),
                slope: positive_slope(&pts),
                argmin: best_t,
                min_epsilon: best,
            });
            series.push(Series::new(format!("n = {n}, p = {p:e}"), pts));
        }
    }
    finish_sweep(
        args,
        out,
        "t",
        &rows,
        &fits,
        Chart {
            title: "infidelity against time".into(),
            x_label: "t".into(),
            y_label: "infidelity".into(),
            log_x: true,
            log_y: true,
            series,
        },
    )
}

fn finish_sweep(
    args: &RunArgs,
    out: &Path,
    name: &str,
    rows: &[AnalysisRow],
    fits: &[FitRow],
    chart: Chart,
) -> Result<()> {
    let data = out.join(format!("sweep_{name}.csv"));
    write_csv(&data, rows)?;
    write_csv(&out.join(format!("sweep_{name}_fit.csv")), fits)?;
    write_svg(args, &out.join(format!("sweep_{name}.svg")), &chart)?;
    for f in fits {
        println!(
            "n={} t={} p={}: slope {:.4}, argmin {}, min epsilon {:.4e}",
            f.n.map_or("*".into(), |v| v.to_string()),
            f.t.map_or("*".into(), |v| v.to_string()),
            f.p.map_or("*".into(), |v| format!("{v:e}")),
            f.slope,
            f.argmin,
            f.min_epsilon
        );
    }
    println!("wrote {} rows to {}", rows.len(), data.display());
    Ok(())
}

#[derive(Serialize)]
struct ShotRow {
    shots: u64,
    j: usize,
    x: f64,
    probability: f64,
    sampled: f64,
    eps_mc: f64,
    eps_rel: f64,
}

#[derive(Serialize)]
struct ShotFit {
    j: usize,
    x: f64,
    probability: f64,
    slope: f64,
}

/// Analytic Monte Carlo errors against shot count, alongside one sampled draw per count.
fn sweep_shots(args: &RunArgs, out: &Path) -> Result<()> {
    let n = single_n(args, 4)?;
    let ts = args.times(&[0.5])?;
    let [t] = ts[..] else {
        bail!("the shots sweep takes a single --t");
    };
    let ps = args.noise_levels(&[0.0])?;
    let [p] = ps[..] else {
        bail!("the shots sweep takes a single --p");
    };
    let shots = args
        .shots
        .as_ref()
        .map_or_else(|| vec![100, 1_000, 10_000, 100_000], |s| s.0.clone());
    if shots.is_empty() {
        bail!("empty shots axis");
    }
    if shots.contains(&0) {
        bail!("--shots must be positive");
    }
    let prep = prep_circuit(args, n)?;
    let prog = program(prep.as_ref(), n, t, mode(args))?;
    let initial = target(n)?;
    let (probs, _) = run(&prog, p, &exact_evolve(&initial, t)?)?;
    let grid = GridSpec::new(n)?;
    let xs: Vec<f64> = grid.positions().collect();
    let dist = ProbabilityVector(probs.clone(), n + 1);

    let panels: Vec<Vec<ShotRow>> = shots
        .par_iter()
        .enumerate()
        .map(|(i, &s)| -> Result<Vec<ShotRow>> {
            let freq = sample_bitstrings(&dist, s, args.seed().wrapping_add(i as u64))?.frequencies();
            Ok((0..grid.n_points())
                .map(|j| ShotRow {
                    shots: s,
                    j,
                    x: xs[j],
                    probability: probs[j],
                    sampled: freq[j],
                    eps_mc: mc_error(probs[j], s),
                    eps_rel: relative_error(probs[j], s),
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let rows: Vec<&ShotRow> = panels.iter().flatten().collect();
    let fits: Vec<ShotFit> = (0..grid.n_points())
        .filter(|&j| probs[j] > 0.0 && probs[j] < 1.0)
        .map(|j| {
            let pts: Vec<(f64, f64)> = panels
                .iter()
                .map(|panel| (panel[j].shots as f64, panel[j].eps_rel))
                .collect();
            ShotFit {
                j,
                x: xs[j],
                probability: probs[j],
                slope: positive_slope(&pts),
            }
        })
        .collect();
    let data = out.join("sweep_shots.csv");
    write_csv(&data, &rows)?;
    write_csv(&out.join("sweep_shots_fit.csv"), &fits)?;
    let brightest = (0..grid.n_points())
        .max_by(|&a, &b| probs[a].total_cmp(&probs[b]))
        .unwrap_or(0);
    let chart = Chart {
        title: format!("relative Monte Carlo error, n = {n}, t = {t}"),
        x_label: "shots".into(),
        y_label: "eps_rel".into(),
        log_x: true,
        log_y: true,
        series: vec![Series::new(
            format!("j = {brightest}"),
            panels
                .iter()
                .map(|panel| (panel[brightest].shots as f64, panel[brightest].eps_rel))
                .collect(),
        )],
    };
    write_svg(args, &out.join("sweep_shots.svg"), &chart)?;
    if let Some(f) = fits.iter().find(|f| f.j == brightest) {
        println!("j = {}: eps_rel slope {:.4} over shots", f.j, f.slope);
    }
    println!("wrote {} rows to {}", rows.len(), data.display());
    Ok(())
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    t: f64,
    total: usize,
    two_qubit: usize,
    depth: usize,
    evolution_two_qubit: usize,
}

#[derive(Serialize)]
struct QuadraticFit {
    t: f64,
    /// Column the fit was made on.
    quantity: &'static str,
    /// `[a, b, c]` of `a n² + b n + c`.
    coefficients: Vec<f64>,
    r_squared: f64,
    residuals: Vec<f64>,
}

#[derive(Serialize)]
struct CountReport<'a> {
    rows: &'a [CountRow],
    fits: Vec<QuadraticFit>,
}

pub fn gatecount(args: &RunArgs) -> Result<()> {
    if args.mode == Some(Mode::Exact) {
        bail!("the exact diagonal has no gate decomposition; gate counts use --mode approx");
    }
    let ns = args.n_values(Span { lo: 4, hi: 10 });
    let ts = args.times(&[1.0])?;
    let out = args.out_dir();
    ensure_dir(&out)?;
    let trained = args.prep.unwrap_or(PrepSource::Trained) == PrepSource::Trained;

    let jobs: Vec<(usize, f64)> = ts.iter().flat_map(|&t| ns.iter().map(move |&n| (n, t))).collect();
    let rows: Vec<CountRow> = jobs
        .par_iter()
        .map(|&(n, t)| -> Result<CountRow> {
            // Counts depend only on structure, so zero angles stand in for a checkpoint.
            let prep = if trained {
                let ansatz = BrickwallAnsatz::new(n + 1)?;
                ansatz.to_circuit(&vec![0.0; ansatz.num_params()])?
            } else {
                Circuit::new(n + 1)
            };
            let spec = EvolutionSpec::new(n, t, DiagonalMode::SmallAngle)?;
            let full = count(&lower(&assemble_evolution(&prep, &spec)?)?);
            let evolution = if t > 0.0 {
                count(&lower(&build_evolution(&spec)?)?).two_qubit
            } else {
                0
            };
            Ok(CountRow {
                n,
                t,
                total: full.total,
                two_qubit: full.two_qubit,
                depth: full.depth,
                evolution_two_qubit: evolution,
            })
        })
        .collect::<Result<_>>()?;

    let mut fits = Vec::new();
    if ns.len() >= 4 {
        for &t in &ts {
            let sel: Vec<&CountRow> = rows.iter().filter(|r| r.t == t).collect();
            let x: Vec<f64> = sel.iter().map(|r| r.n as f64).collect();
            for (quantity, y) in [
                ("two_qubit", sel.iter().map(|r| r.two_qubit as f64).collect::<Vec<_>>()),
                (
                    "evolution_two_qubit",
                    sel.iter().map(|r| r.evolution_two_qubit as f64).collect(),
                ),
            ] {
                if y.iter().all(|&v| v == 0.0) {
                    continue;
                }
                let fit = polyfit(&x, &y, 2);
                println!(
                    "t = {t}: {quantity} = {:.4} n^2 {:+.4} n {:+.4}, R^2 = {:.6}",
                    fit.coefficients[0], fit.coefficients[1], fit.coefficients[2], fit.r_squared
                );
                fits.push(QuadraticFit {
                    t,
                    quantity,
                    coefficients: fit.coefficients,
                    r_squared: fit.r_squared,
                    residuals: fit.residuals,
                });
            }
        }
    }
    write_csv(&out.join("gatecount.csv"), &rows)?;
    let json = serde_json::to_string_pretty(&CountReport { rows: &rows, fits })?;
    let json_path: PathBuf = out.join("gatecount.json");
    fs::write(&json_path, json + "\n").with_context(|| format!("writing {}", json_path.display()))?;
    let chart = Chart {
        title: "two-qubit gates against grid qubits".into(),
        x_label: "n".into(),
        y_label: "RZZ count".into(),
        series: ts
            .iter()
            .map(|&t| {
                Series::new(
                    format!("t = {t}"),
                    rows.iter()
                        .filter(|r| r.t == t)
                        .map(|r| (r.n as f64, r.two_qubit as f64))
                        .collect(),
                )
            })
            .collect(),
        ..Chart::default()
    };
    write_svg(args, &out.join("gatecount.svg"), &chart)?;
    for r in &rows {
        println!(
            "n = {:>2}, t = {}: total {}, two-qubit {}, depth {}, evolution two-qubit {}",
            r.n, r.t, r.total, r.two_qubit, r.depth, r.evolution_two_qubit
        );
    }
    Ok(())
}
