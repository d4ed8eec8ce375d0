use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "romdom", version, about = "Roman domination variants: check, solve, enumerate, extend")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Edge-list file: header `n m`, then one `u v` per line.
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    pub graph: Option<PathBuf>,

    /// Built-in family instead of a file.
    #[arg(long, value_name = "NAME", requires = "size")]
    pub family: Option<String>,

    /// Parameter of the built-in family.
    #[arg(long, value_name = "T")]
    pub size: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a function against a property.
    Check {
        #[command(flatten)]
        source: GraphSource,
        /// Digit string, `v value` pairs, or @FILE.
        #[arg(long)]
        function: String,
        /// rdf, prdf, urrdf, minimal-rdf or minimal-prdf.
        #[arg(long)]
        property: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Class-specific optimization.
    Solve {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        what: SolveWhat,
        /// `auto` to recognize the class, or @FILE with a JSON partition.
        #[arg(long, default_value = "auto")]
        partition: String,
        /// Weight budget for prdf-split.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stream every solution of a kind.
    Enumerate {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        what: EnumerateWhat,
        /// Split partition for urrdf-split: `auto` or @FILE.
        #[arg(long, default_value = "auto")]
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Extend a pre-solution to a minimal perfect RDF.
    Extend {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        function: String,
        #[arg(long, value_enum, default_value = "search")]
        method: ExtendMethod,
        /// Cap on vertices below 2 for the bounded method.
        #[arg(long, default_value_t = romdom::solvers::DEFAULT_BOUNDED_CAP)]
        limit: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustive ground truth on small graphs.
    Oracle {
        #[command(flatten)]
        source: GraphSource,
        /// A function property or `2-packing`.
        #[arg(long)]
        property: String,
        /// enumerate, count or min-weight.
        #[arg(long, default_value = "enumerate")]
        mode: String,
        /// Maximum graph order.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a hardness gadget from a source instance.
    Gadget {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        kind: GadgetKind,
        /// Source parameter for perfect-domination and irredundant.
        #[arg(long)]
        k: Option<usize>,
        /// Colour classes for multicolored: @FILE with one class per line.
        #[arg(long)]
        partition: Option<String>,
        /// Also write PREFIX.el and, if present, PREFIX.f.
        #[arg(long, value_name = "PREFIX")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Measure elementary steps between consecutive solutions.
    BenchDelay {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value = "urrdf")]
        what: DelayWhat,
        /// Stop after this many elementary steps.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a family member or a seeded random graph as an edge list.
    Generate {
        #[arg(long, conflicts_with = "random")]
        family: Option<String>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, value_enum)]
        random: Option<RandomKind>,
        /// Order of the random graph.
        #[arg(long, requires = "random")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for random graphs.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveWhat {
    UrSplit,
    PrdfSplit,
    PrdfCobipartite,
    UrCobipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateWhat {
    Urrdf,
    UrrdfSplit,
    MinimalRdf,
    MinimalPrdf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DelayWhat {
    Urrdf,
    MinimalRdf,
    MinimalPrdf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtendMethod {
    /// Branching search over forced 2-vertices.
    Search,
    /// Only extensions keeping the 2-set fixed.
    FixedV2,
    /// Exhaustive search over all functions above the pre-solution.
    Bounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    PerfectDomination,
    Irredundant,
    Multicolored,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    Gnp,
    Split,
    Cobipartite,
}
