//! `trplan`: design and evaluate time-truncated acceptance sampling plans
//! under the transmuted Rayleigh lifetime model.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trplan::plan::tables::PlanSource;

#[derive(Parser, Debug)]
#[command(
    name = "trplan",
    version,
    about = "Acceptance sampling plans for transmuted Rayleigh lifetimes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smallest sample size meeting the consumer's confidence level.
    Design(DesignArgs),
    /// Emit, print or check one of the four plan tables.
    Tables(TablesArgs),
    /// Probability of accepting a lot.
    Oc(OcArgs),
    /// Producer's risk: probability of rejecting a good lot.
    Risk(PlanArgs),
    /// Smallest quality ratio σ/σ₀ that keeps the producer's risk at or below δ.
    MinRatio(MinRatioArgs),
    /// Maximum likelihood fit with goodness-of-fit and descriptive statistics.
    Fit(FitArgs),
    /// Monte Carlo check of the acceptance probability.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Decimal digits for probabilities.
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u8).range(1..=15))]
    precision: u8,
}

#[derive(Args, Debug)]
pub struct DesignArgs {
    /// Consumer's confidence level P*.
    #[arg(long, required_unless_present = "curve")]
    pstar: Option<f64>,
    /// Acceptance number.
    #[arg(long, default_value_t = 2)]
    c: u32,
    /// Test time as a multiple of the specified scale σ₀.
    #[arg(long, conflicts_with = "t")]
    tratio: Option<f64>,
    /// Specified mean lifetime; fixes σ₀.
    #[arg(long)]
    mu0: Option<f64>,
    /// Absolute test time; needs --mu0.
    #[arg(long, requires = "mu0")]
    t: Option<f64>,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    lambda: f64,
    /// Sample size against t/σ₀ for every P* in the table grid.
    #[arg(long, conflicts_with_all = ["pstar", "tratio", "mu0", "t"])]
    curve: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    /// Table number.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    which: u8,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    lambda: f64,
    /// Sample sizes behind tables 2 to 4.
    #[arg(long, default_value = "recomputed", value_parser = parse_plans)]
    plans: PlanSource,
    /// The table as published instead of a recomputation.
    #[arg(long, conflicts_with_all = ["compare", "plans", "lambda"])]
    printed: bool,
    /// Compare the recomputed table cell by cell against this CSV file.
    #[arg(long, value_name = "CSV")]
    compare: Option<PathBuf>,
    /// Largest difference counted as agreement (default depends on the table).
    #[arg(long, requires = "compare")]
    tolerance: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct PlanArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    c: u32,
    #[arg(long)]
    tratio: f64,
    /// Quality ratio σ/σ₀.
    #[arg(long)]
    ratio: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    lambda: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct OcArgs {
    #[arg(long, required_unless_present = "curve")]
    n: Option<u32>,
    #[arg(long, default_value_t = 2)]
    c: u32,
    #[arg(long, required_unless_present = "curve")]
    tratio: Option<f64>,
    /// Quality ratio σ/σ₀.
    #[arg(long, required_unless_present = "curve")]
    ratio: Option<f64>,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    lambda: f64,
    /// Acceptance probability over the table grid of P*, t/σ₀ and σ/σ₀.
    #[arg(long, conflicts_with_all = ["n", "tratio", "ratio"])]
    curve: bool,
    /// Sample sizes used by --curve.
    #[arg(long, default_value = "recomputed", value_parser = parse_plans, requires = "curve")]
    plans: PlanSource,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct MinRatioArgs {
    #[arg(long)]
    pstar: f64,
    #[arg(long)]
    c: u32,
    #[arg(long)]
    tratio: f64,
    /// Sample size; defaults to the minimum for --pstar.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    lambda: f64,
    /// Largest tolerated producer's risk.
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    /// One observation per line; `#` starts a comment line.
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    datafile: Option<PathBuf>,
    /// Embedded data set: 1 (software failure times) or 2 (ball bearing endurance).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    builtin: Option<u8>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    c: u32,
    #[arg(long)]
    tratio: f64,
    /// True quality ratio σ/σ₀ of the simulated lots.
    #[arg(long)]
    ratio: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    lambda: f64,
    #[arg(long, default_value_t = trplan::montecarlo::DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_plans(s: &str) -> Result<PlanSource, String> {
    s.parse()
}

/// Exit status classes.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, out-of-range values or malformed input data.
    Usage(String),
    /// I/O or computation failure.
    Runtime(anyhow::Error),
}

impl From<trplan::Error> for Failure {
    fn from(e: trplan::Error) -> Self {
        match e {
            trplan::Error::Unsatisfiable { .. } => Failure::Runtime(e.into()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Design(a) => commands::design(&a),
        Command::Tables(a) => commands::tables(&a),
        Command::Oc(a) => commands::oc(&a),
        Command::Risk(a) => commands::risk(&a),
        Command::MinRatio(a) => commands::min_ratio(&a),
        Command::Fit(a) => commands::fit(&a),
        Command::Simulate(a) => commands::simulate(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
