use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use posprob::geometry::DEFAULT_WORKERS;
use posprob::{BasisPair, Budget, Error};

mod commands;
mod render;

/// Exact probabilities that a positive element stays positive under a change
/// of basis, for symmetric and quasisymmetric function bases.
#[derive(Debug, Parser)]
#[command(name = "posprob", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    format: OutputFormat,

    /// Largest degree to enumerate, for every pair. Defaults to 12 for
    /// partition-indexed pairs and 8 for composition-indexed pairs.
    #[arg(long, env = "POSPROB_MAX_N", global = true)]
    max_n: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact probability with its factor list.
    Prob(Target),
    /// The labelled transition matrix.
    Coeff(Target),
    /// Product formula, determinant ratio and Monte Carlo side by side.
    Verify(VerifyArgs),
    /// Probabilities for n = 1..=n-max.
    Decay(DecayArgs),
}

#[derive(Debug, Args)]
struct Target {
    /// One of s/m, h/s, e/s, e/m, qs/M, qs/F, F/M.
    #[arg(long, value_parser = parse_pair)]
    pair: BasisPair,
    /// Degree.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_WORKERS, value_parser = parse_workers)]
    workers: usize,
}

#[derive(Debug, Args)]
struct DecayArgs {
    #[arg(long, value_parser = parse_pair)]
    pair: BasisPair,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: u32,
}

fn parse_pair(s: &str) -> Result<BasisPair, String> {
    s.parse::<BasisPair>().map_err(|_| {
        let known: Vec<&str> = BasisPair::ALL.iter().map(|p| p.as_str()).collect();
        format!("unknown pair {s:?}; expected one of {}", known.join(", "))
    })
}

fn parse_workers(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(w) if w >= 1 => Ok(w),
        _ => Err(format!("workers must be a positive integer, got {s:?}")),
    }
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Disagree = 1,
    Usage = 2,
    Budget = 3,
    Internal = 4,
}

pub fn status_for(err: &Error) -> Status {
    match err {
        Error::BudgetExceeded { .. } => Status::Budget,
        Error::Triangularity(_) => Status::Internal,
        Error::InvalidDegree(_)
        | Error::UnknownPair(_)
        | Error::InvalidArgument(_)
        | Error::SizeMismatch { .. }
        | Error::InvalidPartition { .. }
        | Error::InvalidComposition { .. }
        | Error::InvalidSubset { .. } => Status::Usage,
        Error::DimensionMismatch { .. } | Error::Malformed(_) => Status::Internal,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.max_n.map(Budget::uniform).unwrap_or_default();
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Prob(t) => commands::prob(&mut out, t.pair, t.n, &budget, cli.format),
        Command::Coeff(t) => commands::coeff(&mut out, t.pair, t.n, &budget, cli.format),
        Command::Verify(v) => commands::verify(
            &mut out,
            &commands::VerifyRequest {
                pair: v.target.pair,
                n: v.target.n,
                samples: v.samples,
                seed: v.seed,
                workers: v.workers,
            },
            &budget,
            cli.format,
        ),
        Command::Decay(d) => commands::decay(&mut out, d.pair, d.n_max, &budget, cli.format),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(commands::Failure::Lib(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(status_for(&err) as u8)
        }
        Err(commands::Failure::Io(err)) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
