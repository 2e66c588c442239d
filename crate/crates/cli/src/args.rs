use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Graph inputs are file paths or `catalog:<spec>` pseudo-paths such as
/// `catalog:complete:3`; matched cubic graphs use `catalog:theta`,
/// `catalog:k4`, `catalog:theta-pair` or `catalog:blowup:<graph spec>`.
#[derive(Debug, Parser)]
#[command(name = "chromahom", version, about = "Categorified graph polynomials: complexes, homology and oracle checks")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Add wall-clock timing to the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic polynomial, state sum and bigraded homology.
    Chromatic(ChromaticArgs),
    /// Dichromatic polynomial and its trigraded homology.
    Dichromatic(DichromaticArgs),
    /// Impropriety polynomials and their evaluations.
    Impropriety(ImproprietyArgs),
    /// Potts partition function by three independent routes.
    Potts(PottsArgs),
    /// Penrose–Kauffman polynomial of a cubic graph with perfect matching.
    Penrose(PenroseArgs),
    /// Homology over a color algebra.
    ColorHomology(ColorArgs),
    /// Run a suite of identity and oracle checks.
    Verify(VerifyArgs),
    /// List built-in graphs.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChromaticVar {
    Lambda,
    Q,
}

#[derive(Debug, Args)]
pub struct ChromaticArgs {
    pub input: String,
    /// Print C(λ), or C(1+q) in the homology-facing variable.
    #[arg(long, value_enum, default_value_t = ChromaticVar::Lambda)]
    pub var: ChromaticVar,
    #[arg(long)]
    pub homology: bool,
    /// Compare evaluations with brute-force proper-coloring counts.
    #[arg(long, value_delimiter = ',')]
    pub colors: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    #[value(name = "v-lambda")]
    VLambda,
    #[value(name = "p-q")]
    PQ,
}

#[derive(Debug, Args)]
pub struct DichromaticArgs {
    pub input: String,
    #[arg(long, value_enum, default_value_t = Convention::VLambda)]
    pub convention: Convention,
    #[arg(long)]
    pub homology: bool,
}

#[derive(Debug, Args)]
pub struct ImproprietyArgs {
    pub input: String,
    #[arg(long)]
    pub colors: u64,
    /// Compare with brute-force impropriety counts.
    #[arg(long)]
    pub oracle: bool,
    /// Also derive each level from the dichromatic homology.
    #[arg(long)]
    pub homology: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PottsMethod {
    Brute,
    Dichromatic,
    Homology,
    All,
}

#[derive(Debug, Args)]
pub struct PottsArgs {
    pub input: String,
    #[arg(long)]
    pub spins: u64,
    #[arg(long, required_unless_present = "sweep")]
    pub beta: Option<f64>,
    #[arg(long, value_enum, default_value_t = PottsMethod::All)]
    pub method: PottsMethod,
    /// `b0:b1:steps`, evenly spaced inclusive of both ends.
    #[arg(long)]
    pub sweep: Option<String>,
}

#[derive(Debug, Args)]
pub struct PenroseArgs {
    pub input: String,
    #[arg(long)]
    pub dichromatic: bool,
    #[arg(long)]
    pub homology: bool,
    #[arg(long, value_delimiter = ',')]
    pub colors: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    pub input: String,
    /// `an:n`, `klein4`, `cyclic:n`, `group:o1,o2,...` or `table:<file>`.
    #[arg(long)]
    pub algebra: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Chromatic,
    Dichromatic,
    Impropriety,
    Potts,
    Penrose,
    Color,
    Structure,
    All,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["graph", "matched"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: Option<String>,
    /// A matched cubic graph (for the penrose suite).
    #[arg(long)]
    pub matched: Option<String>,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// List matched cubic graphs instead of plain graphs.
    #[arg(long)]
    pub matched: bool,
}
