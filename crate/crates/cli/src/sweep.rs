//! The verification sweep behind `epimatch verify`: randomly generated
//! instances, an exhaustive pass over the smallest parameters, and a
//! negative control that makes sure the verifier can fail at all.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use epimatch_core::{
    build_four, generate_instance, verify_equivalence, verify_reductions, BitVector, OvInstance,
    Solver, VectorSet, VerificationReport,
};

use crate::{run_parallel, CliResult};

/// Parameters of a verification sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Number of randomly generated instances; alternates planted and
    /// not-planted.
    pub trials: usize,
    /// Random instances draw n uniformly from `2..=max_n` and m from `2..=n`.
    pub max_n: usize,
    /// Random instances draw d uniformly from `1..=max_d`.
    pub max_d: usize,
    pub seed: u64,
    /// Worker threads; 0 means one per available CPU.
    pub parallel: usize,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            trials: 500,
            max_n: 8,
            max_d: 6,
            seed: 42,
            parallel: 0,
        }
    }
}

/// One verified instance inside a sweep.
#[derive(Debug, Clone)]
pub struct SweepItem {
    pub label: String,
    pub report: VerificationReport,
}

/// Everything a sweep produced.
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub items: Vec<SweepItem>,
    /// The deliberately corrupted instance was flagged as failing.
    pub negative_control_ok: bool,
}

impl SweepOutcome {
    pub fn failures(&self) -> impl Iterator<Item = &SweepItem> {
        self.items.iter().filter(|item| !item.report.pass())
    }

    pub fn pass(&self) -> bool {
        self.negative_control_ok && self.failures().next().is_none()
    }
}

enum Job {
    Random { trial: usize },
    Exhaustive { d: usize, packed: u64 },
}

/// Exhaustive n = m = 2 instance: four vectors of dimension `d` packed into
/// the low `4d` bits of `packed`.
fn exhaustive_instance(d: usize, packed: u64) -> OvInstance {
    let mask = (1u64 << d) - 1;
    let vector = |slot: usize| BitVector::from_index_bits(packed >> (d * slot) & mask, d).unwrap();
    OvInstance::new(
        VectorSet::new(vec![vector(0), vector(1)]).unwrap(),
        VectorSet::new(vec![vector(2), vector(3)]).unwrap(),
    )
    .unwrap()
}

fn random_instance(config: &SweepConfig, trial: usize) -> CliResult<(String, OvInstance)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(trial as u64));
    let n = rng.gen_range(2..=config.max_n.max(2));
    let m = rng.gen_range(2..=n);
    let d = rng.gen_range(1..=config.max_d.max(1));
    let planted = trial.is_multiple_of(2);
    let instance = generate_instance(n, m, d, planted, rng.gen())?;
    let label = format!(
        "trial {trial} (n={n} m={m} d={d} {})",
        if planted { "planted" } else { "no-pair" }
    );
    Ok((label, instance))
}

/// Corrupt a no-instance's threshold downward by one; verification must
/// then report a failure, otherwise the verifier itself is broken.
fn negative_control() -> CliResult<bool> {
    let instance = generate_instance(2, 2, 2, false, 0)?;
    let built = build_four(&instance)?;
    let corrupted = built.with_threshold(built.threshold() - 1);
    let report = verify_reductions(false, &[corrupted], &Solver::ALL);
    Ok(!report.pass())
}

/// Runs the full sweep: `config.trials` random instances, an exhaustive
/// pass over every n = m = 2 instance with d in {1, 2}, and the negative
/// control. Individual instance failures are collected, not raised.
pub fn run_verify_sweep(config: &SweepConfig) -> CliResult<SweepOutcome> {
    let mut jobs: Vec<Job> = (0..config.trials).map(|trial| Job::Random { trial }).collect();
    for d in [1usize, 2] {
        for packed in 0..1u64 << (4 * d) {
            jobs.push(Job::Exhaustive { d, packed });
        }
    }

    let results = run_parallel(jobs.len(), config.parallel, |i| -> CliResult<SweepItem> {
        let (label, instance) = match &jobs[i] {
            Job::Random { trial } => random_instance(config, *trial)?,
            Job::Exhaustive { d, packed } => (
                format!("exhaustive d={d} #{packed}"),
                exhaustive_instance(*d, *packed),
            ),
        };
        let report = verify_equivalence(&instance)?;
        Ok(SweepItem { label, report })
    });

    let items = results.into_iter().collect::<CliResult<Vec<SweepItem>>>()?;
    Ok(SweepOutcome {
        items,
        negative_control_ok: negative_control()?,
    })
}
