use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use treelike_core::recognize::ClassLabel;

use crate::format::Format;

#[derive(Debug, Parser)]
#[command(
    name = "treelike",
    version,
    about = "Edge deletion into cacti, constellations, caterpillars and linear forests",
    after_help = "Exit status: 0 solved, 2 infeasible or rejected, 1 error. Errors are JSON on stderr."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Graph encoding for input, and for graph output (`auto` writes edge lists).
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Override a size ceiling of the exact solvers, e.g. `pruned_edges=40`.
    #[arg(long = "limit", global = true, value_name = "KEY=VALUE")]
    pub limits: Vec<String>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership in a class and print the certificate.
    Recognize {
        #[arg(value_parser = parse_label)]
        label: ClassLabel,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Find a minimum edge deletion into a target class.
    Solve {
        #[arg(value_enum)]
        target: Target,
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Accept disconnected inputs and solve for a forest of cacti.
        #[arg(long)]
        forest: bool,
        /// Compare the polynomial solvers with the exact oracle.
        #[arg(long)]
        cross_check: bool,
    },
    /// Build a hardness gadget, or map a dominating set to a constellation.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Map a certificate across a reduction.
    Translate {
        /// Instance document written by `reduce`.
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        instance: Option<PathBuf>,
        /// Source graph, for the dominating set and constellation pair.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Certificate document to translate.
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Run an exact solver.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Generate a random or enumerated instance.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Edge probability for bipartite-subcubic.
        #[arg(long, default_value_t = 0.7)]
        p: f64,
        /// Position in the labeled catalog; without it the whole catalog is
        /// written as graph6 lines.
        #[arg(long)]
        index: Option<u64>,
    },
    /// Re-check a solution document against a graph.
    Verify {
        #[arg(long)]
        solution: PathBuf,
        #[arg(default_value = "-")]
        input: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Partition into paths on three vertices, to spanning cactus.
    Pip3ToCactus {
        #[arg(default_value = "-")]
        input: String,
        /// Also write the gadget graph in the chosen format.
        #[arg(long)]
        gadget_out: Option<PathBuf>,
    },
    /// Hamiltonian path, to spanning caterpillar of the double subdivision.
    HampathToCaterpillar {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        gadget_out: Option<PathBuf>,
    },
    /// Dominating set, to spanning constellation.
    DomsetToConstellation {
        #[arg(default_value = "-")]
        input: String,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    Hampath {
        #[arg(default_value = "-")]
        input: String,
    },
    Domset {
        #[arg(default_value = "-")]
        input: String,
    },
    Pip3 {
        #[arg(default_value = "-")]
        input: String,
        /// Require every block to induce a path.
        #[arg(long)]
        induced: bool,
    },
    Matching {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Largest spanning subgraph in a class.
    MaxSpanning {
        #[arg(value_parser = parse_label)]
        label: ClassLabel,
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
    },
    /// Probe the three structural conditions on a class.
    PiConditions {
        #[command(flatten)]
        predicate: PredicateArgs,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        exhaustive_up_to: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Compare Hamiltonian path with a spanning class member on |V| - 1 edges.
    PiEquiv {
        #[command(flatten)]
        predicate: PredicateArgs,
        #[arg(default_value = "-")]
        input: String,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PredicateArgs {
    /// A built-in class.
    #[arg(long, value_parser = parse_label)]
    pub class: Option<ClassLabel>,
    /// A shell command reading an edge list and exiting 0 (member) or 1.
    #[arg(long)]
    pub exec: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Cactus,
    Constellation,
    Caterpillar,
    LinearForest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Quasi-threshold solver, else chordal pipeline, else the oracle.
    Auto,
    Chordal,
    Qt,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Auto,
    /// Edge branch and bound (cactus labels).
    Edges,
    /// Dynamic program over cycle families (cactus labels).
    Cycles,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    ChordalRandom,
    QtRandom,
    BipartiteSubcubic,
    LabeledCatalog,
}

fn parse_label(s: &str) -> Result<ClassLabel, String> {
    ClassLabel::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = ClassLabel::ALL.iter().map(|l| l.name()).collect();
        format!("unknown class {s:?}; expected one of {}", names.join(", "))
    })
}
