//! Library side of the `epimatch` command-line harness.
//!
//! The binary in `main.rs` only parses arguments and maps results to exit
//! codes; everything it does is callable from here so the behaviour can be
//! tested directly. Exit-status convention: 0 success, 1 verification
//! failure, 2 usage or parse error.

use std::fmt;
use std::path::PathBuf;

pub mod bench;
pub mod commands;
pub mod sweep;

pub use bench::{
    fit_loglog, fitted_exponent, render_csv, run_bench, write_csv, BenchConfig, BenchRecord,
    MMode, CSV_HEADER,
};
pub use commands::{run_gen, run_reduce, run_solve, ReduceOutput};
pub use sweep::{run_verify_sweep, SweepConfig, SweepItem, SweepOutcome};

/// Errors from the command implementations. They all indicate bad input or
/// a failed environment interaction and map to exit code 2; a *verification
/// failure* is not an error but a reported outcome (exit code 1).
#[derive(Debug)]
pub enum CliError {
    Core(epimatch_core::Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Core(e) => Some(e),
            CliError::Io { source, .. } => Some(source),
        }
    }
}

impl From<epimatch_core::Error> for CliError {
    fn from(e: epimatch_core::Error) -> CliError {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn read_file(path: &std::path::Path) -> CliResult<Vec<u8>> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn write_file(path: &std::path::Path, bytes: &[u8]) -> CliResult<()> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Runs `count` independent jobs on up to `threads` worker threads and
/// returns the results in job order. `threads == 0` means one thread per
/// available CPU. Jobs only share immutable state, so the output does not
/// depend on the thread count.
pub fn run_parallel<T, F>(count: usize, threads: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let threads = match threads {
        0 => std::thread::available_parallelism().map_or(1, |p| p.get()),
        t => t,
    }
    .min(count.max(1));

    if threads <= 1 {
        return (0..count).map(job).collect();
    }

    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<Option<T>>> =
        (0..count).map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let result = job(i);
                *slots[i].lock().unwrap() = Some(result);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("job completed"))
        .collect()
}
