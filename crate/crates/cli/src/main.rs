use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use epimatch_cli::{
    fitted_exponent, run_bench, run_gen, run_reduce, run_solve, run_verify_sweep, BenchConfig,
    CliResult, MMode, SweepConfig,
};
use epimatch_core::{AlphabetKind, Solver};

#[derive(Parser)]
#[command(
    name = "epimatch",
    version,
    about = "Episode matching solvers, orthogonal vectors, and the reductions between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Four-symbol alphabet {0,1,x,$}
    #[value(name = "4")]
    Four,
    /// Binary alphabet {0,1}
    #[value(name = "2")]
    Binary,
}

impl From<KindArg> for AlphabetKind {
    fn from(kind: KindArg) -> AlphabetKind {
        match kind {
            KindArg::Four => AlphabetKind::Four,
            KindArg::Binary => AlphabetKind::Binary,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Dp,
    Greedy,
    Brute,
}

impl From<AlgoArg> for Solver {
    fn from(algo: AlgoArg) -> Solver {
        match algo {
            AlgoArg::Dp => Solver::Dp,
            AlgoArg::Greedy => Solver::Greedy,
            AlgoArg::Brute => Solver::Brute,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random OV instance file with a known answer
    Gen {
        /// Size of the A set
        #[arg(long)]
        n: usize,
        /// Size of the B set (requires n >= m >= 2)
        #[arg(long)]
        m: usize,
        /// Vector dimension
        #[arg(long)]
        d: usize,
        /// Plant one orthogonal pair (yes-instance); without this flag every
        /// orthogonal pair is destroyed (no-instance)
        #[arg(long)]
        planted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path for the instance file
        #[arg(long)]
        out: PathBuf,
    },
    /// Build an episode matching instance from an OV instance file
    Reduce {
        /// OV instance file (as written by gen)
        input: PathBuf,
        /// Alphabet of the construction
        #[arg(long)]
        kind: KindArg,
        /// Output prefix: writes <prefix>.s.txt, <prefix>.p.txt and
        /// <prefix>.meta.txt
        #[arg(long)]
        out: String,
    },
    /// Print the shortest window of S containing P as a subsequence
    Solve {
        /// Text file holding S
        s_path: PathBuf,
        /// Text file holding P
        p_path: PathBuf,
        #[arg(long, default_value = "dp")]
        algo: AlgoArg,
    },
    /// Check reduction equivalence on random and exhaustive instance sweeps
    Verify {
        /// Number of random instances (alternating planted / no-pair)
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Random instances draw n from 2..=N (and m from 2..=n)
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Random instances draw d from 1..=D
        #[arg(long, default_value_t = 6)]
        d: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Worker threads; 0 = one per available CPU
        #[arg(long, default_value_t = 0)]
        parallel: usize,
    },
    /// Time solvers on built reduction instances and write a CSV
    Bench {
        /// Comma-separated source-set sizes, e.g. 64,128,256
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Fixed m for every n (default: balanced, m = n)
        #[arg(long)]
        m: Option<usize>,
        /// Unbalanced mode: m = round(n^ALPHA)
        #[arg(long, conflicts_with = "m")]
        alpha: Option<f64>,
        /// Vector dimension
        #[arg(long, default_value_t = 8)]
        d: usize,
        /// Comma-separated construction alphabets to time
        #[arg(long, value_delimiter = ',', default_value = "4")]
        kind: Vec<KindArg>,
        /// Comma-separated solvers to time
        #[arg(long, value_delimiter = ',', default_value = "dp")]
        algo: Vec<AlgoArg>,
        /// Trials per configuration point, seeded as seed + trial
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Generate planted (yes) instances instead of no-pair instances
        #[arg(long)]
        planted: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        /// Worker threads for instance construction; timed solver calls are
        /// always serialized
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Gen {
            n,
            m,
            d,
            planted,
            seed,
            out,
        } => {
            run_gen(n, m, d, planted, seed, &out)?;
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }

        Command::Reduce { input, kind, out } => {
            let emitted = run_reduce(&input, kind.into(), &out)?;
            print!("{}", epimatch_core::format_metadata(&emitted.instance));
            println!("wrote {}", emitted.s_path.display());
            println!("wrote {}", emitted.p_path.display());
            println!("wrote {}", emitted.meta_path.display());
            Ok(ExitCode::SUCCESS)
        }

        Command::Solve {
            s_path,
            p_path,
            algo,
        } => {
            println!("{}", run_solve(&s_path, &p_path, algo.into())?);
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            trials,
            n,
            d,
            seed,
            parallel,
        } => {
            let outcome = run_verify_sweep(&SweepConfig {
                trials,
                max_n: n,
                max_d: d,
                seed,
                parallel,
            })?;
            let failed = outcome.failures().count();
            for item in outcome.failures() {
                println!("FAIL {}: {}", item.label, item.report);
            }
            println!(
                "verified {} instances: {} pass, {} fail",
                outcome.items.len(),
                outcome.items.len() - failed,
                failed
            );
            println!(
                "negative control (threshold corrupted on a no-instance): {}",
                if outcome.negative_control_ok {
                    "detected"
                } else {
                    "NOT DETECTED"
                }
            );
            Ok(if outcome.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Bench {
            n,
            m,
            alpha,
            d,
            kind,
            algo,
            trials,
            planted,
            seed,
            out,
            parallel,
        } => {
            let config = BenchConfig {
                kinds: kind.into_iter().map(AlphabetKind::from).collect(),
                n_values: n,
                m_mode: match (m, alpha) {
                    (Some(m), _) => MMode::Fixed(m),
                    (None, Some(alpha)) => MMode::Alpha(alpha),
                    (None, None) => MMode::Balanced,
                },
                d,
                solvers: algo.into_iter().map(Solver::from).collect(),
                trials,
                planted,
                seed,
                parallel,
            };
            let records = run_bench(&config)?;
            epimatch_cli::write_csv(&records, &out)?;
            println!("wrote {} records to {}", records.len(), out.display());
            for k in [AlphabetKind::Binary, AlphabetKind::Four] {
                for solver in Solver::ALL {
                    if let Some(exponent) = fitted_exponent(&records, k, solver) {
                        println!(
                            "kind={} solver={solver}: fitted n-exponent {exponent:.3}",
                            k.tag()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
