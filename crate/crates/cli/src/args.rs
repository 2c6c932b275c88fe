use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug, Clone, Serialize, Deserialize)]
#[command(name = "umbral", version, about = "Exact umbral identities, Monte Carlo and quadrature checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Compute a family value exactly.
    Compute(ComputeArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Monte Carlo moment and Kolmogorov-Smirnov checks.
    Mc(McArgs),
    /// Quadrature for even Bernoulli numbers.
    Quad(QuadArgs),
    /// Identity suite, standard Monte Carlo battery and quadrature.
    All(AllArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathChoice {
    Oracle,
    Umbral,
    /// Compute both and require agreement.
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileChoice {
    Quick,
    Full,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct ComputeArgs {
    /// bernoulli, bernoulli-poly, euler, euler-poly, hermite, carlitz,
    /// zeilberger, power-sum or chen-k.
    pub family: String,

    /// Main index; the upper limit for power-sum.
    #[arg(long)]
    pub n: u32,

    /// First index of carlitz and zeilberger.
    #[arg(long)]
    pub m: Option<u32>,

    /// Exponent for power-sum.
    #[arg(long)]
    pub k: Option<u32>,

    #[arg(long, value_enum, default_value_t = PathChoice::Both)]
    pub path: PathChoice,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = ProfileChoice::Quick)]
    pub profile: ProfileChoice,

    /// Run a single identity, e.g. KANEKO.
    #[arg(long)]
    pub id: Option<String>,

    /// Override the one-index bound.
    #[arg(long)]
    pub index: Option<u32>,

    /// Override the two-index bound.
    #[arg(long)]
    pub pair_index: Option<u32>,

    /// Override the series truncation order.
    #[arg(long)]
    pub order: Option<u32>,

    /// Override the quintuple total index.
    #[arg(long)]
    pub quintuple_order: Option<u32>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TargetChoice {
    #[value(name = "L")]
    L,
    #[value(name = "L0")]
    L0,
    #[value(name = "laplace")]
    Laplace,
    /// `(L0 + L)/2`
    #[value(name = "half")]
    Half,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CdfChoice {
    Logistic,
    Sech,
    Laplace,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct McArgs {
    #[arg(long, value_enum, default_value_t = TargetChoice::L)]
    pub target: TargetChoice,

    /// Sampler construction; defaults to the first one for the target.
    #[arg(long)]
    pub construction: Option<String>,

    /// Estimate `E (iX + shift)^n` for this `n`.
    #[arg(long)]
    pub moment: Option<u32>,

    /// Shift `c` in `E (iX + c)^n`; -1/2 for L, 0 otherwise by default.
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<f64>,

    /// Run the Kolmogorov-Smirnov gate.
    #[arg(long)]
    pub ks: bool,

    /// Compare against this CDF instead of the target's own.
    #[arg(long, value_enum)]
    pub ks_against: Option<CdfChoice>,

    #[arg(long, default_value_t = 1_000_000)]
    pub count: usize,

    #[arg(long, env = "UMBRAL_SEED", default_value_t = 42)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct QuadArgs {
    /// Single `n` in 1..=5; all of them when omitted.
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct AllArgs {
    #[arg(long, value_enum, default_value_t = ProfileChoice::Quick)]
    pub profile: ProfileChoice,

    /// Draws per moment estimate.
    #[arg(long, default_value_t = 1_000_000)]
    pub count: usize,

    /// Draws per Kolmogorov-Smirnov gate.
    #[arg(long, default_value_t = 100_000)]
    pub ks_count: usize,

    #[arg(long, env = "UMBRAL_SEED", default_value_t = 42)]
    pub seed: u64,
}
