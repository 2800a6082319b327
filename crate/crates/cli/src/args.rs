use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "genent",
    version,
    about = "Generalized entropies and their composition axioms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy of each distribution in the input file.
    Compute(InputArgs),
    /// Conditional entropy of a joint distribution.
    Conditional(InputArgs),
    /// Entropy of a joint distribution, flattened.
    Joint(InputArgs),
    /// Closed-form entropy of the uniform distribution of dimension n.
    Trace(TraceArgs),
    /// Run the axiom checks and write a JSON report.
    Check(CheckArgs),
    /// Entropy of one distribution across a parameter range.
    Sweep(SweepArgs),
}

/// Family selection. Parameters are kept as text so that `sweep` can accept
/// `start:stop:step` ranges in the same flags.
#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// shannon, general, nath, renyi, tsallis, havrda-charvat or hct
    #[arg(long)]
    pub family: String,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Input file; `.json` is read as JSON, anything else as CSV.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 8)]
    pub max_rows: usize,
    #[arg(long, default_value_t = 8)]
    pub max_cols: usize,
    /// Succeed only if the checks detect a violation.
    #[arg(long)]
    pub expect_violation: bool,
    /// Report path; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
