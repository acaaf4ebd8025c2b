//! The wall-clock benchmark behind `epimatch bench`.
//!
//! Each trial generates an OV instance, builds the requested reductions,
//! and times the pure solver call; construction and I/O stay outside the
//! clock. Rows come out sorted by (kind, n, m, d, solver) and are rendered
//! as CSV. Timing numbers are informational: the harness never turns a
//! slow run into a failure.

use std::collections::HashMap;
use std::time::Instant;

use epimatch_core::{
    build, generate_instance, solve, AlphabetKind, Error, ReductionInstance, Solver,
};

use crate::{run_parallel, CliResult};

/// How the pattern-side set size m is derived from n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MMode {
    /// m = n.
    Balanced,
    /// Fixed m for every n.
    Fixed(usize),
    /// m = round(n^alpha), clamped to at least 2.
    Alpha(f64),
}

impl MMode {
    pub fn m_for(self, n: usize) -> usize {
        match self {
            MMode::Balanced => n,
            MMode::Fixed(m) => m,
            MMode::Alpha(alpha) => ((n as f64).powf(alpha).round() as usize).max(2),
        }
    }
}

/// Parameters of a benchmark run.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    /// Which constructions to time.
    pub kinds: Vec<AlphabetKind>,
    /// Source-set sizes; sorted and deduplicated before running.
    pub n_values: Vec<usize>,
    pub m_mode: MMode,
    pub d: usize,
    pub solvers: Vec<Solver>,
    /// Trials per configuration point, seeded as `seed + trial`.
    pub trials: usize,
    pub planted: bool,
    pub seed: u64,
    /// Worker threads for instance construction; timed solver calls are
    /// always serialized so they never share a core. 0 means one thread
    /// per available CPU.
    pub parallel: usize,
}

impl Default for BenchConfig {
    fn default() -> BenchConfig {
        BenchConfig {
            kinds: vec![AlphabetKind::Four],
            n_values: vec![64, 128, 256],
            m_mode: MMode::Balanced,
            d: 8,
            solvers: vec![Solver::Dp],
            trials: 1,
            planted: false,
            seed: 1,
            parallel: 1,
        }
    }
}

/// One timed solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub kind: AlphabetKind,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub s_len: usize,
    pub p_len: usize,
    pub solver: Solver,
    pub episode_len: usize,
    pub threshold: usize,
    /// The generator's planted flag, i.e. the ground truth.
    pub ov_decision: bool,
    /// `episode_len < threshold`.
    pub episode_decision: bool,
    pub wall_time_ns: u64,
}

pub const CSV_HEADER: &str =
    "kind,n,m,d,s_len,p_len,solver,episode_len,threshold,ov_decision,episode_decision,wall_time_ns";

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.kind.tag(),
            self.n,
            self.m,
            self.d,
            self.s_len,
            self.p_len,
            self.solver,
            self.episode_len,
            self.threshold,
            self.ov_decision,
            self.episode_decision,
            self.wall_time_ns
        )
    }
}

/// Writes the rendered CSV to `path`.
pub fn write_csv(records: &[BenchRecord], path: &std::path::Path) -> CliResult<()> {
    crate::write_file(path, render_csv(records).as_bytes())
}

/// Renders the header plus one row per record.
pub fn render_csv(records: &[BenchRecord]) -> String {
    let mut out = String::with_capacity((records.len() + 1) * 64);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for record in records {
        out.push_str(&record.csv_row());
        out.push('\n');
    }
    out
}

fn timed_solve(r: &ReductionInstance, solver: Solver) -> CliResult<(usize, u64)> {
    let clock = Instant::now();
    let episode = solve(r.s(), r.p(), solver)?;
    let elapsed = clock.elapsed().as_nanos().min(u64::MAX as u128) as u64;
    let episode = episode.ok_or_else(|| {
        Error::InternalInvariant("reduction pattern is not a subsequence of its string".into())
    })?;
    Ok((episode.length, elapsed))
}

/// Runs the benchmark and returns the records in CSV order.
pub fn run_bench(config: &BenchConfig) -> CliResult<Vec<BenchRecord>> {
    let mut kinds = config.kinds.clone();
    kinds.sort_by_key(|k| k.tag());
    kinds.dedup();
    let mut n_values = config.n_values.clone();
    n_values.sort_unstable();
    n_values.dedup();
    let mut solvers: Vec<Solver> = Solver::ALL
        .into_iter()
        .filter(|s| config.solvers.contains(s))
        .collect();
    solvers.dedup();

    // Build every reduction up front (parallelizable), keyed by
    // (kind, n, trial); one OV instance is shared across kinds and solvers
    // of the same point.
    let mut points = Vec::new();
    for &kind in &kinds {
        for &n in &n_values {
            for trial in 0..config.trials.max(1) {
                points.push((kind, n, trial));
            }
        }
    }
    let built = run_parallel(points.len(), config.parallel, |i| -> CliResult<_> {
        let (kind, n, trial) = points[i];
        let m = config.m_mode.m_for(n);
        let instance =
            generate_instance(n, m, config.d, config.planted, config.seed.wrapping_add(trial as u64))?;
        Ok(((kind, n, trial), build(&instance, kind)?))
    });
    let reductions: HashMap<(AlphabetKind, usize, usize), ReductionInstance> =
        built.into_iter().collect::<CliResult<_>>()?;

    // Timed runs stay strictly serial.
    let mut records = Vec::new();
    for &kind in &kinds {
        for &n in &n_values {
            for &solver in &solvers {
                for trial in 0..config.trials.max(1) {
                    let r = &reductions[&(kind, n, trial)];
                    let (episode_len, wall_time_ns) = timed_solve(r, solver)?;
                    records.push(BenchRecord {
                        kind,
                        n: r.n(),
                        m: r.m(),
                        d: r.d(),
                        s_len: r.s().len(),
                        p_len: r.p().len(),
                        solver,
                        episode_len,
                        threshold: r.threshold(),
                        ov_decision: config.planted,
                        episode_decision: episode_len < r.threshold(),
                        wall_time_ns,
                    });
                }
            }
        }
    }
    Ok(records)
}

/// Least-squares slope of `ln y` against `ln x`: the growth exponent of a
/// power law through the points. `None` without two distinct x values.
pub fn fit_loglog(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|&(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let count = logs.len() as f64;
    let mean_x = logs.iter().map(|(x, _)| x).sum::<f64>() / count;
    let mean_y = logs.iter().map(|(_, y)| y).sum::<f64>() / count;
    let var_x: f64 = logs.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    if var_x == 0.0 {
        return None;
    }
    let cov: f64 = logs
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    Some(cov / var_x)
}

/// Median wall time per n for one (kind, solver) group, then the fitted
/// n-exponent over those medians. Used for the human-readable summary.
pub fn fitted_exponent(records: &[BenchRecord], kind: AlphabetKind, solver: Solver) -> Option<f64> {
    let mut by_n: HashMap<usize, Vec<u64>> = HashMap::new();
    for r in records.iter().filter(|r| r.kind == kind && r.solver == solver) {
        by_n.entry(r.n).or_default().push(r.wall_time_ns);
    }
    let mut points: Vec<(f64, f64)> = by_n
        .into_iter()
        .map(|(n, mut times)| {
            times.sort_unstable();
            (n as f64, times[times.len() / 2] as f64)
        })
        .collect();
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    fit_loglog(&points)
}
