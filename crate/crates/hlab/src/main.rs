//! Thin command-line frontend over [`hlab::cli`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hlab::cli::{
    cmd_classify, cmd_figure1, cmd_greedy, cmd_matroid, cmd_mvdccp, parse_sizes, OutputFormat,
    DEFAULT_SEED,
};
use hlab::oracle::ProblemKind;

#[derive(Parser)]
#[command(
    name = "hlab",
    about = "Desk-scale laboratory for hereditary set systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ProblemArg {
    Misp,
    Hcp,
    Sat,
}

impl From<ProblemArg> for ProblemKind {
    fn from(p: ProblemArg) -> ProblemKind {
        match p {
            ProblemArg::Misp => ProblemKind::Misp,
            ProblemArg::Hcp => ProblemKind::Hcp,
            ProblemArg::Sat => ProblemKind::Sat,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a family file for heredity and exchange; exit 0 iff a matroid.
    Matroid {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy versus exact optimum on a family file; exit 0 iff the gap is 0.
    Greedy {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated positive integer weights, one per ground element.
        #[arg(long)]
        weights: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the canonical-instance report bundle into a directory.
    Figure1 {
        #[arg(long, default_value = "figure1-report")]
        out: PathBuf,
    },
    /// Minimum vertex-disjoint cycle/edge cover of a DIMACS graph.
    Mvdccp {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extension-cost growth report over a size range.
    Classify {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        /// Inclusive size range, e.g. 4..16.
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Instances generated per size.
        #[arg(long, default_value_t = 5)]
        instances: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(report: String, out: Option<PathBuf>) -> hlab::Result<()> {
    match out {
        Some(path) => std::fs::write(path, report)?,
        None => print!("{report}"),
    }
    Ok(())
}

fn dispatch(cli: Cli) -> hlab::Result<u8> {
    match cli.command {
        Command::Matroid { input, format, out } => {
            let text = std::fs::read_to_string(&input)?;
            let id = input
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "family".to_string());
            let (report, code) = cmd_matroid(&text, &id, format)?;
            emit(report, out)?;
            Ok(code as u8)
        }
        Command::Greedy {
            input,
            weights,
            format,
            out,
        } => {
            let text = std::fs::read_to_string(&input)?;
            let id = input
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "family".to_string());
            let parsed: Result<Vec<u64>, _> =
                weights.split(',').map(|t| t.trim().parse::<u64>()).collect();
            let parsed = parsed
                .map_err(|_| hlab::Error::Contract(format!("bad weight list {weights:?}")))?;
            let (report, code) = cmd_greedy(&text, &id, &parsed, format)?;
            emit(report, out)?;
            Ok(code as u8)
        }
        Command::Figure1 { out } => {
            let files = cmd_figure1(&out)?;
            let mut listing = String::new();
            for f in files {
                listing.push_str(&format!("{}\n", f.display()));
            }
            print!("{listing}");
            Ok(0)
        }
        Command::Mvdccp { input, format, out } => {
            let text = std::fs::read_to_string(&input)?;
            let report = cmd_mvdccp(&text, format)?;
            emit(report, out)?;
            Ok(0)
        }
        Command::Classify {
            problem,
            sizes,
            seed,
            instances,
            format,
            out,
        } => {
            let range = parse_sizes(&sizes)?;
            let report = cmd_classify(problem.into(), range, seed, instances, format)?;
            emit(report, out)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
