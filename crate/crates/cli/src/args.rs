use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "postpfa", version, about = "Exact and sampled runs of postselecting automata")]
pub struct Cli {
    /// TOML file with defaults for seed, trials, precision, format and max-prefix.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one of the constructions and write it as a JSON document.
    Build(BuildArgs),
    /// Exact accept/reject masses of a word.
    Run(RunArgs),
    /// Monte Carlo estimate under restart semantics.
    Mc(McArgs),
    /// Honest certificate for a unary member.
    Cert(CertArgs),
    /// Maximum acceptance over all certificates with a bounded prefix.
    Soundness(SoundnessArgs),
    /// Success probability of the bit-guessing rule.
    Coin(CoinArgs),
    /// Run acceptance suites and emit a report.
    Suite(SuiteArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Equal,
    EqualBlocks,
    EqualBlocksF,
    Log,
    Upower,
    UpowerK,
    Usquare,
    Upower6,
    Dima3,
    Dima3Subset,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub family: Construction,
    /// Error parameter as `p/q` (`y` for the coin-based counter automaton).
    #[arg(long)]
    pub x: Option<String>,
    /// Block-length map `f(m) = a m + b`.
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
    /// Exponent base for upower-k.
    #[arg(long)]
    pub k: Option<u32>,
    /// Set membership bits, `x_1` first.
    #[arg(long)]
    pub bits: Option<String>,
    /// Coin truncation in bit groups.
    #[arg(long)]
    pub precision: Option<usize>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertificateArg {
    /// Certificate prefix for verifier documents.
    #[arg(long)]
    pub cert: Option<String>,
    /// Symbol repeated after the prefix.
    #[arg(long, default_value = "$")]
    pub tail: String,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub automaton: PathBuf,
    #[arg(long, default_value = "")]
    pub input: String,
    #[command(flatten)]
    pub certificate: CertificateArg,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long)]
    pub automaton: PathBuf,
    #[arg(long, default_value = "")]
    pub input: String,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Passes allowed per trial before giving up.
    #[arg(long)]
    pub restart_cap: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Protocol {
    Upower,
    Usquare,
    Upower6,
}

#[derive(Debug, Args)]
pub struct CertArgs {
    #[arg(long, value_enum)]
    pub protocol: Protocol,
    /// Input length.
    #[arg(long)]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct SoundnessArgs {
    #[arg(long)]
    pub automaton: PathBuf,
    #[arg(long, default_value = "")]
    pub input: String,
    #[arg(long)]
    pub max_prefix: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CoinArgs {
    #[arg(long)]
    pub bits: String,
    /// Which bit to guess.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long)]
    pub precision: Option<usize>,
    /// Exact binomial sum instead of sampling.
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Suite number or name, or `all`.
    #[arg(long, default_value = "all")]
    pub name: String,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub trials: Option<u64>,
    /// Also write the report as CSV to this file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// List suites and exit.
    #[arg(long)]
    pub list: bool,
}
