use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(name = "fuzzylab", version, about = "Fuzzy circle and sphere models: checks, spectra, oracles, convergence")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Seed for randomized inputs; echoed in the report header.
    #[arg(long, global = true, env = "FUZZYLAB_SEED")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Run the identity suites of one model.
    Verify(VerifyArgs),
    /// Eigenvalues and multiplicities of H, R² and the angular momentum.
    Spectrum(ModelArgs),
    /// Strong-convergence sweeps, norm bounds and witnesses.
    Converge(ConvergeArgs),
    /// Exact radial integrals and energies against their large-k series.
    Oracle(OracleArgs),
    /// Operator matrices, ladder tables or fuzzy harmonics as CSV.
    Dump(DumpArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, default_value_t = 2)]
    pub d: u32,
    #[arg(long)]
    pub lambda: usize,
    #[arg(long, conflicts_with = "schedule")]
    pub k: Option<f64>,
    /// default, prop-circle, prop-sphere, practical or custom (with --k).
    #[arg(long)]
    pub schedule: Option<String>,
    /// Build the model even when k is too small for Λ.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Replace every check tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Decay,
    Norm,
    Product,
    Witness,
}

#[derive(Debug, Clone, Args)]
pub struct ConvergeArgs {
    #[arg(long, default_value_t = 2)]
    pub d: u32,
    /// Largest Λ; defaults to 8 (D=2) or 4 (D=3).
    #[arg(long)]
    pub lambda: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub lambda_min: usize,
    #[arg(long, conflicts_with = "schedule")]
    pub k: Option<f64>,
    /// Defaults to prop-circle (D=2) or prop-sphere (D=3).
    #[arg(long)]
    pub schedule: Option<String>,
    #[arg(long, value_enum, default_value = "decay")]
    pub table: Table,
    /// Multiplier from the corpus.
    #[arg(long)]
    pub f: Option<String>,
    /// Second multiplier for the product table.
    #[arg(long)]
    pub g: Option<String>,
    /// Vector from the corpus.
    #[arg(long)]
    pub phi: Option<String>,
    /// Witness tolerance against the closed forms.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleCheck {
    All,
    Energies,
    Gaps,
    Elements,
    Cl,
    Tail,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub check: OracleCheck,
    /// Restrict energies and gaps to one dimension.
    #[arg(long)]
    pub d: Option<u32>,
    /// Comma-separated k values; defaults to 1e4,1e5,1e6,1e7,1e8.
    #[arg(long, value_delimiter = ',')]
    pub ks: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpWhat {
    Operators,
    Ladder,
    Harmonics,
}

#[derive(Debug, Clone, Args)]
pub struct DumpArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value = "operators")]
    pub what: DumpWhat,
}
