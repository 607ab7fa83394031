use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod format;

#[derive(Parser)]
#[command(
    name = "logical-noise",
    version,
    about = "Logical noise channels of stabilizer codes and repeater key rates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact logical channel polynomials for a code under a physical noise model.
    Channel(ChannelArgs),
    /// Secret key rates over a sweep of total distances, as CSV.
    Rates(RateArgs),
    /// Minimal BSM parameter mu for a nonzero key fraction.
    Threshold(ThresholdArgs),
    /// Key rates of long chains with hundreds of segments at 800 km.
    Table1(Table1Args),
    /// Cross-check the engine against the state-vector oracle and the sampler against closed forms.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Noise {
    Dephasing,
    Depol1q,
    Depol2q,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Decoding {
    Standard,
    Adaptive,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SchemeArg {
    Exact2,
    Sequential,
    Mc,
}

#[derive(Args)]
pub struct ChannelArgs {
    /// Catalog name (bit3, phase3, five, steane, surface9, shor9, eleven) or a code file.
    #[arg(long)]
    pub code: String,
    #[arg(long, value_enum, default_value = "dephasing")]
    pub noise: Noise,
    #[arg(long, value_enum, default_value = "standard")]
    pub strategy: Decoding,
    /// Evaluate every entry at this physical error probability.
    #[arg(long)]
    pub eval_p: Option<f64>,
    /// Write the channel as CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the syndrome table as CSV.
    #[arg(long)]
    pub table_out: Option<PathBuf>,
}

#[derive(Args)]
pub struct RateArgs {
    #[arg(long, default_value_t = 2)]
    pub segments: usize,
    /// Total distance in km: a value, a list `100,200`, or a range `start:stop:step`.
    #[arg(long, default_value = "100")]
    pub length: String,
    #[arg(long, default_value_t = 1.0)]
    pub p0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    /// Defaults to --mu.
    #[arg(long)]
    pub mu0: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub f0: f64,
    /// Memory coherence time in seconds.
    #[arg(long, default_value_t = 1.0)]
    pub tc: f64,
    /// Clock time per attempt in seconds.
    #[arg(long, default_value_t = 1e-6)]
    pub clock: f64,
    /// Memory cutoff in attempts (two segments only).
    #[arg(long)]
    pub cutoff: Option<u32>,
    /// none, a catalog code, or a code file.
    #[arg(long, default_value = "none")]
    pub encode: String,
    /// Syndrome identification for memory dephasing of the encoded qubits.
    #[arg(long, value_enum, default_value = "adaptive")]
    pub strategy: Decoding,
    #[arg(long, value_enum, default_value = "sequential")]
    pub scheme: SchemeArg,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ThresholdArgs {
    #[arg(long, default_value_t = 2)]
    pub segments: usize,
    #[arg(long, default_value = "none")]
    pub encode: String,
    #[arg(long, value_enum, default_value = "adaptive")]
    pub strategy: Decoding,
}

#[derive(Args)]
pub struct Table1Args {
    /// Clock time per attempt in seconds.
    #[arg(long, default_value_t = 0.0)]
    pub clock: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("LOGICAL_NOISE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.parse().ok().filter(|&t| t > 0).with_context(|| {
        format!("LOGICAL_NOISE_THREADS must be a positive integer, got {value:?}")
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("configuring worker threads")
}

fn run(cli: Cli) -> Result<bool> {
    configure_threads()?;
    match cli.command {
        Command::Channel(args) => commands::channel(&args).map(|()| true),
        Command::Rates(args) => commands::rates(&args).map(|()| true),
        Command::Threshold(args) => commands::threshold(&args).map(|()| true),
        Command::Table1(args) => commands::table1(&args).map(|()| true),
        Command::Validate(args) => commands::validate(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Parses `800`, `100,200,400` or `start:stop:step` (inclusive).
pub fn parse_lengths(spec: &str) -> Result<Vec<f64>> {
    let num = |s: &str| -> Result<f64> {
        let v: f64 = s
            .trim()
            .parse()
            .with_context(|| format!("invalid length {s:?}"))?;
        if !(v >= 0.0 && v.is_finite()) {
            bail!("length {v} km must be finite and nonnegative");
        }
        Ok(v)
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step <= 0.0 || stop < start {
                bail!("length range {spec:?} needs start <= stop and a positive step");
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize;
            Ok((0..=count).map(|i| start + i as f64 * step).collect())
        }
        [list] => list.split(',').map(num).collect(),
        _ => bail!("length {spec:?} is neither a list nor start:stop:step"),
    }
}
