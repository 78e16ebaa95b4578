//! Run settings from flags and an optional flat `key = value` file.
//!
//! File keys are the long flag names (`n`, `t-range`, `p`, …). Flags win.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Approx,
}

impl From<Mode> for qwave::circuits::DiagonalMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => qwave::circuits::DiagonalMode::Exact,
            Mode::Approx => qwave::circuits::DiagonalMode::SmallAngle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrepSource {
    /// Brickwall circuit from a training checkpoint.
    Trained,
    /// Normalized Ricker state injected directly.
    Exact,
}

/// Inclusive integer range written `lo:hi` or `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn values(&self) -> Vec<usize> {
        (self.lo..=self.hi).collect()
    }
}

fn split_pair(s: &str) -> Option<(&str, &str)> {
    s.split_once("..").or_else(|| s.split_once(':'))
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, b) = split_pair(s).ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
        let lo = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
        let hi = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span { lo, hi })
    }
}

/// Closed real interval `a:b`, stepped by `dt` elsewhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub start: f64,
    pub end: f64,
}

impl FromStr for Interval {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, b) = split_pair(s).ok_or_else(|| format!("expected start:end, got {s:?}"))?;
        let start: f64 = a.trim().parse().map_err(|_| format!("bad start {a:?}"))?;
        let end: f64 = b.trim().parse().map_err(|_| format!("bad end {b:?}"))?;
        if !(start.is_finite() && end.is_finite() && start <= end) {
            return Err(format!("empty interval {s:?}"));
        }
        Ok(Interval { start, end })
    }
}

impl Interval {
    /// `start, start + dt, …` up to `end` inclusive (with rounding slack).
    pub fn grid(&self, dt: f64) -> Result<Vec<f64>> {
        if !(dt > 0.0 && dt.is_finite()) {
            bail!("dt must be positive, got {dt}");
        }
        let steps = ((self.end - self.start) / dt + 1e-9).floor() as usize;
        Ok((0..=steps).map(|i| self.start + i as f64 * dt).collect())
    }
}

/// Comma-separated floats.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatList(pub Vec<f64>);

impl FromStr for FloatList {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let values = s
            .split(',')
            .map(|v| v.trim().parse::<f64>().map_err(|_| format!("bad number {v:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if values.iter().any(|v| !v.is_finite()) {
            return Err(format!("non-finite value in {s:?}"));
        }
        Ok(FloatList(values))
    }
}

/// Comma-separated shot counts.
#[derive(Debug, Clone, PartialEq)]
pub struct ShotList(pub Vec<u64>);

impl FromStr for ShotList {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.split(',')
            .map(|v| v.trim().parse::<u64>().map_err(|_| format!("bad shot count {v:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(ShotList)
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct RunArgs {
    /// Flat `key = value` settings file; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Grid qubits; the register has n + 1 qubits.
    #[arg(long)]
    pub n: Option<usize>,
    /// Inclusive range of n, e.g. 4:9.
    #[arg(long)]
    pub n_range: Option<Span>,
    /// Evolution time(s), comma separated.
    #[arg(long)]
    pub t: Option<FloatList>,
    /// Time interval start:end, stepped by --dt.
    #[arg(long)]
    pub t_range: Option<Interval>,
    #[arg(long)]
    pub dt: Option<f64>,
    /// Two-qubit depolarizing probabilities, comma separated.
    #[arg(long)]
    pub p: Option<FloatList>,
    /// Shots to sample; comma-separated list for the shots sweep.
    #[arg(long)]
    pub shots: Option<ShotList>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long, value_enum)]
    pub prep: Option<PrepSource>,
    /// Checkpoint path (default: <out>/prep_n<n>.json).
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// L-BFGS iteration budget per start.
    #[arg(long)]
    pub iters: Option<usize>,
    /// Independent random starts.
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Skip SVG charts.
    #[arg(long)]
    pub no_svg: bool,
}

fn parse_value<T: FromStr>(key: &str, raw: &str, path: &Path, line: usize) -> Result<T>
where
    T::Err: fmt::Display,
{
    raw.parse::<T>()
        .map_err(|e| anyhow!("{}:{line}: bad value for {key}: {e}", path.display()))
}

fn parse_enum<T: ValueEnum>(key: &str, raw: &str, path: &Path, line: usize) -> Result<T> {
    T::from_str(raw, true).map_err(|e| anyhow!("{}:{line}: bad value for {key}: {e}", path.display()))
}

impl RunArgs {
    /// Fill unset fields from the config file, if one was given.
    pub fn resolve(mut self) -> Result<Self> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        for (key, (line, raw)) in parse_flat(&text, &path)? {
            let raw = raw.as_str();
            match key.as_str() {
                "n" => fill(&mut self.n, || parse_value(&key, raw, &path, line))?,
                "n-range" => fill(&mut self.n_range, || parse_value(&key, raw, &path, line))?,
                "t" => fill(&mut self.t, || parse_value(&key, raw, &path, line))?,
                "t-range" => fill(&mut self.t_range, || parse_value(&key, raw, &path, line))?,
                "dt" => fill(&mut self.dt, || parse_value(&key, raw, &path, line))?,
                "p" => fill(&mut self.p, || parse_value(&key, raw, &path, line))?,
                "shots" => fill(&mut self.shots, || parse_value(&key, raw, &path, line))?,
                "seed" => fill(&mut self.seed, || parse_value(&key, raw, &path, line))?,
                "mode" => fill(&mut self.mode, || parse_enum(&key, raw, &path, line))?,
                "prep" => fill(&mut self.prep, || parse_enum(&key, raw, &path, line))?,
                "checkpoint" => fill(&mut self.checkpoint, || Ok(PathBuf::from(raw)))?,
                "out" => fill(&mut self.out, || Ok(PathBuf::from(raw)))?,
                "iters" => fill(&mut self.iters, || parse_value(&key, raw, &path, line))?,
                "restarts" => fill(&mut self.restarts, || parse_value(&key, raw, &path, line))?,
                "no-svg" => {
                    if !self.no_svg {
                        self.no_svg = parse_value(&key, raw, &path, line)?;
                    }
                }
                other => bail!("{}:{line}: unknown key {other:?}", path.display()),
            }
        }
        Ok(self)
    }

    pub fn out_dir(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| PathBuf::from("out"))
    }

    pub fn checkpoint_path(&self, n: usize) -> PathBuf {
        self.checkpoint
            .clone()
            .unwrap_or_else(|| self.out_dir().join(format!("prep_n{n}.json")))
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    /// Times from `--t` or `--t-range`/`--dt`, else `default`.
    pub fn times(&self, default: &[f64]) -> Result<Vec<f64>> {
        if self.t.is_some() && self.t_range.is_some() {
            bail!("give either --t or --t-range, not both");
        }
        let ts = match (&self.t, &self.t_range) {
            (Some(FloatList(ts)), _) => ts.clone(),
            (None, Some(range)) => range.grid(self.dt.unwrap_or(0.01))?,
            (None, None) => default.to_vec(),
        };
        if ts.is_empty() {
            bail!("empty time axis");
        }
        if let Some(bad) = ts.iter().find(|t| t.is_nan() || **t < 0.0) {
            bail!("evolution time must be non-negative, got {bad}");
        }
        Ok(ts)
    }

    pub fn noise_levels(&self, default: &[f64]) -> Result<Vec<f64>> {
        let ps = self.p.as_ref().map_or_else(|| default.to_vec(), |l| l.0.clone());
        if ps.is_empty() {
            bail!("empty noise axis");
        }
        if let Some(bad) = ps.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            bail!("noise probability must lie in [0, 1], got {bad}");
        }
        Ok(ps)
    }

    pub fn n_values(&self, default: Span) -> Vec<usize> {
        match (self.n_range, self.n) {
            (Some(r), _) => r.values(),
            (None, Some(n)) => vec![n],
            (None, None) => default.values(),
        }
    }
}

fn fill<T>(slot: &mut Option<T>, value: impl FnOnce() -> Result<T>) -> Result<()> {
    if slot.is_none() {
        *slot = Some(value()?);
    }
    Ok(())
}

/// `key = value` lines; `#` starts a comment. Later duplicates are errors.
pub fn parse_flat(text: &str, path: &Path) -> Result<BTreeMap<String, (usize, String)>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("{}:{}: expected key = value", path.display(), i + 1))?;
        let key = k.trim().replace('_', "-");
        if out.insert(key.clone(), (i + 1, v.trim().to_string())).is_some() {
            bail!("{}:{}: duplicate key {key:?}", path.display(), i + 1);
        }
    }
    Ok(out)
}
