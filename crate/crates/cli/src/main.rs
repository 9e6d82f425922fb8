use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dualcolor_cli::commands::{self, AuditOptions, BenchOptions, GenerateKind, SolveOptions, Solver, Suite};
use dualcolor_cli::{read_instance, CliError, Output};

#[derive(Parser)]
#[command(name = "dualcolor", version, about = "Decide sigma(G, w) <= w(V) - k, kernelize, and generate instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance. Exit code 0 for yes, 1 for no, 2 on error.
    Solve {
        /// Instance file (dwc, interval or setcover), or - for stdin.
        path: PathBuf,
        #[command(flatten)]
        solver: SolverFlags,
        /// Include an optimal (or shortcut) coloring, 1-indexed.
        #[arg(long)]
        emit_certificate: bool,
        /// Vertex cap for the exhaustive oracle.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Apply both reduction rules to a fixpoint.
    Kernelize {
        path: PathBuf,
        /// Include the rule log and the vertex map.
        #[arg(long)]
        emit_trace: bool,
    },
    /// Write an instance file to standard output.
    Generate {
        #[command(subcommand)]
        kind: GenerateCommand,
    },
    /// Check structural claims and class-specific bounds. Exit code 0 when
    /// every check passes, 1 on a violation, 2 on error.
    Audit {
        path: PathBuf,
        #[arg(long)]
        claims: bool,
        #[arg(long)]
        interval: bool,
        #[arg(long)]
        split: bool,
    },
    /// Time a benchmark suite and print CSV.
    Bench {
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Repetitions per instance; the median is reported.
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct SolverFlags {
    /// Dynamic program over the antimatching (default).
    #[arg(long)]
    fpt: bool,
    /// Exhaustive subset oracle.
    #[arg(long)]
    oracle: bool,
    /// Run both and fail if they disagree.
    #[arg(long)]
    both: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    FptScaling,
    FptScalingN,
    Kernel,
}

#[derive(Subcommand)]
enum GenerateCommand {
    TightGeneral {
        #[arg(long)]
        k: u64,
    },
    TightInterval {
        #[arg(long)]
        k: u64,
    },
    /// Reduce a setcover file to a split-graph instance.
    Setcover {
        #[arg(long)]
        input: PathBuf,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    RandomSplit {
        #[arg(long)]
        clique: usize,
        #[arg(long)]
        stable: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    RandomInterval {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        span: i64,
        #[arg(long, default_value_t = 5)]
        max_len: i64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Clique plus a planted antimatching of `pairs` non-edges.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pairs: usize,
        #[arg(long, default_value_t = 8)]
        palette: usize,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Solve {
            path,
            solver,
            emit_certificate,
            cap,
        } => {
            let solver = match (solver.oracle, solver.both) {
                (true, _) => Solver::Oracle,
                (_, true) => Solver::Both,
                _ => Solver::Fpt,
            };
            let opts = SolveOptions {
                solver,
                emit_certificate,
                cap,
            };
            commands::solve(&read_instance(&path)?, opts)
        }
        Command::Kernelize { path, emit_trace } => commands::kernelize_cmd(&read_instance(&path)?, emit_trace),
        Command::Generate { kind } => {
            let kind = match kind {
                GenerateCommand::TightGeneral { k } => GenerateKind::TightGeneral { k },
                GenerateCommand::TightInterval { k } => GenerateKind::TightInterval { k },
                GenerateCommand::Setcover { input } => GenerateKind::SetCover {
                    input: read_instance(&input)?,
                },
                GenerateCommand::Random { n, p, k, max_weight, seed } => {
                    GenerateKind::Random { n, p, k, max_weight, seed }
                }
                GenerateCommand::RandomSplit { clique, stable, d, k, max_weight, seed } => {
                    GenerateKind::RandomSplit { clique, stable, d, k, max_weight, seed }
                }
                GenerateCommand::RandomInterval { n, span, max_len, k, max_weight, seed } => {
                    GenerateKind::RandomInterval { n, span, max_len, k, max_weight, seed }
                }
                GenerateCommand::Planted { n, pairs, palette, k, max_weight, seed } => {
                    GenerateKind::Planted { n, pairs, palette, k, max_weight, seed }
                }
            };
            commands::generate(kind)
        }
        Command::Audit {
            path,
            claims,
            interval,
            split,
        } => commands::audit(&read_instance(&path)?, AuditOptions { claims, interval, split }),
        Command::Bench { suite, jobs, seed, reps } => {
            let suite = match suite {
                SuiteArg::FptScaling => Suite::FptScaling,
                SuiteArg::FptScalingN => Suite::FptScalingN,
                SuiteArg::Kernel => Suite::Kernel,
            };
            commands::bench(suite, BenchOptions { jobs, seed, reps })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("dualcolor: {e}");
            ExitCode::from(2)
        }
    }
}
