use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "p1calc", version, about = "Combinatorial Pontryagin and Stiefel-Whitney computations")]
pub struct Cli {
    /// Seed for every randomised search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Move budget for each sphere reduction.
    #[arg(long, global = true, default_value_t = 20_000)]
    pub budget: usize,
    /// JSON file holding xi chains; read if present and rewritten afterwards.
    #[arg(long, global = true)]
    pub xi_cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Add intermediate data to the report.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Worker threads for link computations.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Forward,
    Reverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sphere and manifold verdicts.
    Check { input: String },
    /// A move sequence down to the simplex boundary.
    Reduce { input: String },
    /// Stiefel-Whitney chains on the barycentric subdivision.
    Sw { input: String },
    /// The chain dual to the first Pontryagin class.
    P1 {
        #[command(subcommand)]
        method: P1Method,
    },
    /// Cycles in the move graph of 2-spheres.
    Gamma2 {
        #[command(subcommand)]
        action: Gamma2Action,
    },
    /// Counts of 2-spheres by vertex number.
    EnumerateSpheres {
        #[arg(long)]
        max_vertices: usize,
    },
    /// Names and invariants of the bundled complexes.
    Library,
}

#[derive(Debug, Subcommand)]
pub enum P1Method {
    /// Sum of the local formula over links.
    Local { input: String },
    /// Reduction paths of codimension-3 links and links of their vertices.
    Direct { input: String },
}

#[derive(Debug, Subcommand)]
pub enum Gamma2Action {
    /// Split a cycle into elementary cycles.
    Decompose {
        input: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Forward)]
        order: OrderArg,
    },
}
