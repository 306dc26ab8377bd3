use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use isopos_cli::bench::{run_bench, BenchConfig};
use isopos_cli::io::{read_graph, write_graph, Format};
use isopos_cli::mine::{replay, run_mine, MineConfig};
use isopos_cli::report::{check_report, trace_report};

#[derive(Parser)]
#[command(name = "isopos", version, about = "Vertex-positioning graph isomorphism toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the heuristic on two graph files and print its verdict.
    Check {
        left: PathBuf,
        right: PathBuf,
        /// Input format; inferred from the extension when omitted (.g6, .edges, .txt).
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also print the exact oracle's answer.
        #[arg(long)]
        oracle: bool,
    },
    /// Print every round with its level sets and characteristic tables.
    Trace {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Compare the heuristic with the exact oracle on seeded random pairs.
    Mine {
        #[arg(long, default_value_t = 5)]
        nmin: usize,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for the summary, the JSON-lines records and the pair files.
        #[arg(long)]
        out: PathBuf,
        /// Add one trial on the rook's 4x4 graph versus the Shrikhande graph.
        #[arg(long)]
        stress: bool,
        /// Only draw relabeled pairs.
        #[arg(long)]
        permuted_only: bool,
    },
    /// Reload an archive written by `mine` and re-run every recorded pair.
    Replay { dir: PathBuf },
    /// Time the heuristic on relabeled G(n, p) pairs and fit a log-log slope.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "20,40,80,160")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a named or random graph: a fixture name, gnp:<n>:<p> or cgnp:<n>:<p>.
    Gen {
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Convert between graph6 and edge-list files.
    Convert {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum)]
        from: Option<Format>,
        #[arg(long, value_enum)]
        to: Option<Format>,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Check { left, right, format, oracle } => {
            let (g, h) = (read_graph(&left, format)?, read_graph(&right, format)?);
            print!("{}", check_report(&g, &h, oracle)?);
        }
        Command::Trace { left, right, format } => {
            let (g, h) = (read_graph(&left, format)?, read_graph(&right, format)?);
            print!("{}", trace_report(&g, &h)?);
        }
        Command::Mine { nmin, nmax, p, trials, seed, out, stress, permuted_only } => {
            let cfg = MineConfig { n_min: nmin, n_max: nmax, p, trials, seed, out, stress, permuted_only };
            print!("{}", run_mine(&cfg)?.summary());
        }
        Command::Replay { dir } => {
            let r = replay(&dir)?;
            println!("records={}", r.records);
            println!("reproduced={}", r.reproduced);
            for t in &r.mismatched {
                println!("mismatch trial={t}");
            }
            anyhow::ensure!(r.mismatched.is_empty(), "{} records did not replay", r.mismatched.len());
        }
        Command::Bench { sizes, p, reps, seed } => {
            print!("{}", run_bench(&BenchConfig { sizes, p, reps, seed })?.render());
        }
        Command::Gen { spec, seed, out, format } => {
            let g = isopos_cli::generate(&spec, seed)?;
            write_graph(&out, &g, format)?;
        }
        Command::Convert { input, output, from, to } => {
            let g = read_graph(&input, from)?;
            write_graph(&output, &g, to)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
