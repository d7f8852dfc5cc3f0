//! Command-line front end for `treelike-core`: graph file formats, JSON
//! documents for solutions, certificates and reduction instances, and the
//! `treelike` command dispatcher.
//!
//! Every command runs through [`run`], which takes its streams as
//! arguments so the whole tool can be driven in-process.

mod args;
pub mod format;
pub mod predicate;
pub mod schema;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use treelike_core::chordal_cactus::max_spanning_cactus_chordal;
use treelike_core::generate::{bipartite_subcubic, chordal_random, qt_random};
use treelike_core::oracle::{
    hamiltonian_path, max_matching, max_spanning_cactus_by_cycles, max_spanning_cactus_by_edges,
    max_spanning_in_class, min_dominating_set, partition_into_p3, Limits, OracleError, P3Block,
    P3Mode,
};
use treelike_core::pipeline::{CactusOptions, PipelineError};
use treelike_core::qt_cactus::max_spanning_cactus_qt;
use treelike_core::recognize::{
    in_target_class, is_bipartite, is_chordal, is_quasi_threshold, is_subcubic, ClassLabel,
    RecognizeError,
};
use treelike_core::reduce::{
    cactus_to_pip3_solution, caterpillar_to_hampath, constellation_to_domset,
    domset_to_constellation, hampath_to_caterpillar_instance, hampath_to_caterpillar_solution,
    min_constellation_deletion, pi_deletion_equiv_hampath, pip3_solution_to_cactus,
    pip3_to_cactus_instance, verify_pi_conditions, ClassPredicate, LabelPredicate, PiProbe,
    ReduceError, ReductionKind,
};
use treelike_core::{Edge, Graph, SpanningSolution};

use args::{
    Cli, Command, Engine, Family, Method, OracleCommand, PredicateArgs, ReduceCommand, Target,
};
use format::{parse_graph, parse_labeled_edge_list, serialize_graph, Format, ParseError, Position};
use predicate::ExecPredicate;
use schema::{
    CertificateDoc, EquivalenceDoc, Extras, InstanceDoc, PiReportDoc, SchemaError, SolutionDoc,
};

pub const EXIT_SOLVED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

/// Largest vertex count for which `gen labeled-catalog` lists every graph.
const CATALOG_LISTING_VERTICES: usize = 7;

/// An error report, written to standard error as one line of JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub byte: Option<usize>,
    #[serde(skip)]
    pub exit: i32,
}

impl Failure {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
            line: None,
            byte: None,
            exit: EXIT_ERROR,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure::new("usage", message)
    }

    fn infeasible(message: impl Into<String>) -> Self {
        Failure {
            exit: EXIT_INFEASIBLE,
            ..Failure::new("infeasible", message)
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let mut f = Failure::new("parse", e.to_string());
        match e.position() {
            Position::Line(l) => f.line = Some(l),
            Position::Byte(b) => f.byte = Some(b),
        }
        f
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Infeasible(_) => Failure::infeasible(e.to_string()),
            OracleError::SizeLimit { .. } => Failure::new("size-limit", e.to_string()),
            OracleError::Predicate(_) => Failure::new("predicate", e.to_string()),
            OracleError::Recognize(e) => e.into(),
            OracleError::Solution(_) => Failure::new("solution", e.to_string()),
        }
    }
}

impl From<RecognizeError> for Failure {
    fn from(e: RecognizeError) -> Self {
        Failure::new("size-limit", e.to_string())
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Disconnected { .. } => Failure::infeasible(e.to_string()),
            PipelineError::WrongClass { .. } => Failure::new("wrong-class", e.to_string()),
            PipelineError::Oracle(e) => e.into(),
            PipelineError::Recognize(e) => e.into(),
            _ => Failure::new("solver", e.to_string()),
        }
    }
}

impl From<ReduceError> for Failure {
    fn from(e: ReduceError) -> Self {
        match e {
            ReduceError::Oracle(e) => e.into(),
            ReduceError::Recognize(e) => e.into(),
            ReduceError::NotBipartite { .. } | ReduceError::DegreeTooHigh { .. } => {
                Failure::new("invalid-input", e.to_string())
            }
            _ => Failure::new("invalid-certificate", e.to_string()),
        }
    }
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        Failure::new("invalid-document", e.to_string())
    }
}

/// What a successful command prints, and its exit status.
struct Output {
    text: String,
    exit: i32,
}

impl Output {
    fn solved(text: String) -> Self {
        Output {
            text,
            exit: EXIT_SOLVED,
        }
    }

    fn with_status(text: String, ok: bool) -> Self {
        Output {
            text,
            exit: if ok { EXIT_SOLVED } else { EXIT_INFEASIBLE },
        }
    }
}

struct Context<'a> {
    format: Format,
    limits: Limits,
    seed: u64,
    stdin: &'a mut dyn Read,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return EXIT_SOLVED;
        }
        Err(e) => return report(stderr, &Failure::usage(e.render().to_string().trim_end())),
    };
    let result = parse_limits(&cli.limits).and_then(|limits| {
        let mut ctx = Context {
            format: cli.format,
            limits,
            seed: cli.seed,
            stdin,
        };
        dispatch(&mut ctx, cli.command)
    });
    match result {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| io_failure(path, e)),
                None => stdout
                    .write_all(out.text.as_bytes())
                    .map_err(|e| Failure::new("io", e.to_string())),
            };
            match written {
                Ok(()) => out.exit,
                Err(f) => report(stderr, &f),
            }
        }
        Err(f) => report(stderr, &f),
    }
}

fn report(stderr: &mut dyn Write, f: &Failure) -> i32 {
    #[derive(Serialize)]
    struct Report<'a> {
        error: &'a Failure,
    }
    let line = serde_json::to_string(&Report { error: f }).expect("failure serializes");
    let _ = writeln!(stderr, "{line}");
    f.exit
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::new("io", format!("{}: {e}", path.display()))
}

fn parse_limits(items: &[String]) -> Result<Limits, Failure> {
    let mut l = Limits::default();
    for item in items {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("limit {item:?} is not KEY=VALUE")))?;
        let v: u64 = value
            .parse()
            .map_err(|_| Failure::usage(format!("limit value {value:?} is not a number")))?;
        let small = || {
            usize::try_from(v).map_err(|_| Failure::usage(format!("limit value {v} is too large")))
        };
        match key.replace('-', "_").as_str() {
            "hamiltonian_vertices" => l.hamiltonian_vertices = small()?,
            "domination_vertices" => l.domination_vertices = small()?,
            "p3_vertices" => l.p3_vertices = small()?,
            "subset_edges" => l.subset_edges = small()?,
            "pruned_edges" => l.pruned_edges = small()?,
            "hyperedges" => l.hyperedges = small()?,
            "cycle_dp_vertices" => l.cycle_dp_vertices = small()?,
            "max_combinations" => l.max_combinations = v,
            "search_nodes" => l.search_nodes = v,
            other => return Err(Failure::usage(format!("unknown limit {other:?}"))),
        }
    }
    Ok(l)
}

fn dispatch(ctx: &mut Context<'_>, command: Command) -> Result<Output, Failure> {
    match command {
        Command::Recognize { label, input } => {
            let (g, _) = read_graph(ctx, &input)?;
            let cert = in_target_class(&g, label)?;
            Ok(Output::with_status(json(&cert), cert.is_accepted()))
        }
        Command::Solve {
            target,
            input,
            method,
            forest,
            cross_check,
        } => solve(
            ctx,
            target,
            &input,
            method,
            CactusOptions {
                forest,
                cross_check,
            },
        ),
        Command::Reduce(r) => reduce(ctx, r),
        Command::Translate {
            instance,
            graph,
            certificate,
        } => translate(ctx, instance.as_deref(), graph.as_deref(), &certificate),
        Command::Oracle(o) => oracle(ctx, o),
        Command::Gen {
            family,
            n,
            p,
            index,
        } => generate(ctx, family, n, p, index),
        Command::Verify { solution, input } => {
            let (g, _) = read_graph(ctx, &input)?;
            let doc: SolutionDoc = read_json(&solution)?;
            #[derive(Serialize)]
            struct Verdict {
                valid: bool,
                label: ClassLabel,
                deletions: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                reason: Option<String>,
            }
            let reason = match doc.to_solution(&g) {
                Err(e) => Some(e.to_string()),
                Ok(sol) if !doc.certificate.check(&sol.kept_graph()) => {
                    Some("stored certificate does not check against the kept edges".into())
                }
                Ok(_) => None,
            };
            let v = Verdict {
                valid: reason.is_none(),
                label: doc.label,
                deletions: doc.deletions,
                reason,
            };
            Ok(Output::with_status(json(&v), v.valid))
        }
    }
}

fn read_bytes(ctx: &mut Context<'_>, input: &str) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    if input == "-" {
        ctx.stdin
            .read_to_end(&mut buf)
            .map_err(|e| Failure::new("io", format!("standard input: {e}")))?;
    } else {
        buf = std::fs::read(input).map_err(|e| io_failure(Path::new(input), e))?;
    }
    Ok(buf)
}

/// The input graph, with vertex names when the format is `labeled`.
fn read_graph(ctx: &mut Context<'_>, input: &str) -> Result<(Graph, Option<Vec<String>>), Failure> {
    let bytes = read_bytes(ctx, input)?;
    if ctx.format == Format::Labeled {
        let text =
            String::from_utf8(bytes).map_err(|_| Failure::new("parse", "input is not UTF-8"))?;
        let (g, labels) = parse_labeled_edge_list(&text)?;
        return Ok((g, Some(labels)));
    }
    Ok((parse_graph(&bytes, ctx.format)?, None))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    serde_json::from_str(&text).map_err(|e| {
        let mut f = Failure::new("invalid-document", format!("{}: {e}", path.display()));
        f.line = Some(e.line());
        f
    })
}

/// One line of compact JSON.
fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("documents serialize");
    s.push('\n');
    s
}

/// A graph in the output format, newline-terminated.
fn graph_text(g: &Graph, format: Format) -> String {
    let mut s = serialize_graph(g, format);
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// Rebuilds the solution from its document, as a reader would, and checks
/// the recognizer accepts it with the expected label.
fn self_check(g: &Graph, doc: &SolutionDoc, label: ClassLabel) -> Result<(), Failure> {
    let fail = |why: String| Failure::new("self-check", why);
    if doc.label != label {
        return Err(fail(format!(
            "expected a {label} solution, produced {}",
            doc.label
        )));
    }
    let sol = doc.to_solution(g).map_err(|e| fail(e.to_string()))?;
    if !sol.verify() || !doc.certificate.check(&sol.kept_graph()) {
        return Err(fail(
            "certificate does not check against the kept edges".into(),
        ));
    }
    Ok(())
}

fn solution_output(
    g: &Graph,
    sol: &SpanningSolution,
    method: &str,
    extras: Extras,
) -> Result<Output, Failure> {
    let doc = SolutionDoc::new(sol, method, extras);
    self_check(g, &doc, sol.label())?;
    Ok(Output::solved(json(&doc)))
}

fn solve(
    ctx: &mut Context<'_>,
    target: Target,
    input: &str,
    method: Method,
    options: CactusOptions,
) -> Result<Output, Failure> {
    let (g, labels) = read_graph(ctx, input)?;
    if target != Target::Cactus {
        if !matches!(method, Method::Auto | Method::Oracle) {
            return Err(Failure::usage(
                "--method chordal and qt apply to the cactus target only",
            ));
        }
        if options.forest || options.cross_check {
            return Err(Failure::usage(
                "--forest and --cross-check apply to the cactus target only",
            ));
        }
    }
    let l = &ctx.limits;
    let (sol, name, mut extras) = match target {
        Target::Cactus => solve_cactus(&g, method, &options, l)?,
        Target::Constellation => {
            let sol = min_constellation_deletion(&g, l)?;
            let d = constellation_to_domset(&g, &sol)?;
            let extras = Extras {
                dominating_set: Some(d),
                ..Extras::default()
            };
            (sol, "dominating-set", extras)
        }
        Target::Caterpillar => (
            max_spanning_in_class(&g, ClassLabel::Caterpillar, l)?,
            "oracle",
            Extras::default(),
        ),
        Target::LinearForest => (
            max_spanning_in_class(&g, ClassLabel::LinearForest, l)?,
            "oracle",
            Extras::default(),
        ),
    };
    extras.labels = labels;
    solution_output(&g, &sol, name, extras)
}

fn solve_cactus(
    g: &Graph,
    method: Method,
    options: &CactusOptions,
    limits: &Limits,
) -> Result<(SpanningSolution, &'static str, Extras), Failure> {
    let method = match method {
        Method::Auto if is_quasi_threshold(g).is_accepted() => Method::Qt,
        Method::Auto if is_chordal(g).is_accepted() => Method::Chordal,
        Method::Auto => Method::Oracle,
        m => m,
    };
    let (sol, name, extras) = match method {
        Method::Qt => {
            let r = max_spanning_cactus_qt(g, options, limits)?;
            let extras = Extras {
                centers: Some(r.centers),
                matching: Some(r.matching),
                ..Extras::default()
            };
            (r.solution, "quasi-threshold", extras)
        }
        Method::Chordal => {
            let r = max_spanning_cactus_chordal(g, options, limits)?;
            let extras = Extras {
                triangles: Some(r.selection.triangles().collect()),
                joins: Some(r.joins),
                ..Extras::default()
            };
            (r.solution, "chordal", extras)
        }
        Method::Oracle | Method::Auto => {
            let label = if options.forest {
                ClassLabel::ForestOfCacti
            } else {
                ClassLabel::Cactus
            };
            (
                max_spanning_in_class(g, label, limits)?,
                "oracle",
                Extras::default(),
            )
        }
    };
    // The pipelines label connected outputs as cacti; under --forest every
    // method reports the same label.
    if options.forest && sol.label() == ClassLabel::Cactus {
        let relabeled = SpanningSolution::new(
            sol.host().clone(),
            sol.kept().clone(),
            ClassLabel::ForestOfCacti,
        )
        .map_err(|e| Failure::new("self-check", e.to_string()))?;
        return Ok((relabeled, name, extras));
    }
    Ok((sol, name, extras))
}

fn reduce(ctx: &mut Context<'_>, command: ReduceCommand) -> Result<Output, Failure> {
    let (input, gadget_out, kind) = match command {
        ReduceCommand::DomsetToConstellation { input, set } => {
            let (g, _) = read_graph(ctx, &input)?;
            let sol = domset_to_constellation(&g, &set)?;
            let extras = Extras {
                dominating_set: Some(set),
                ..Extras::default()
            };
            return solution_output(&g, &sol, "dominating-set", extras);
        }
        ReduceCommand::Pip3ToCactus { input, gadget_out } => {
            (input, gadget_out, ReductionKind::Pip3ToCactus)
        }
        ReduceCommand::HampathToCaterpillar { input, gadget_out } => {
            (input, gadget_out, ReductionKind::HampathToCaterpillar)
        }
    };
    let (g, _) = read_graph(ctx, &input)?;
    let inst = match kind {
        ReductionKind::Pip3ToCactus => pip3_to_cactus_instance(&g)?,
        ReductionKind::HampathToCaterpillar => hampath_to_caterpillar_instance(&g),
    };
    if let Some(path) = gadget_out {
        std::fs::write(&path, graph_text(&inst.gadget, ctx.format))
            .map_err(|e| io_failure(&path, e))?;
    }
    Ok(Output::solved(json(&InstanceDoc::new(&inst))))
}

fn translate(
    ctx: &mut Context<'_>,
    instance: Option<&Path>,
    graph: Option<&Path>,
    certificate: &Path,
) -> Result<Output, Failure> {
    let cert: CertificateDoc = read_json(certificate)?;
    let mismatch = || Failure::usage("the certificate kind does not belong to this reduction");
    let solved = |host: &Graph, sol: &SpanningSolution| -> Result<CertificateDoc, Failure> {
        let doc = SolutionDoc::new(sol, "translate", Extras::default());
        self_check(host, &doc, sol.label())?;
        Ok(CertificateDoc::Solution(Box::new(doc)))
    };
    let out = if let Some(path) = instance {
        let inst = read_json::<InstanceDoc>(path)?.to_instance()?;
        match (inst.kind, cert) {
            (ReductionKind::HampathToCaterpillar, CertificateDoc::HamiltonianPath { path }) => {
                solved(
                    &inst.gadget,
                    &hampath_to_caterpillar_solution(&inst, &path)?,
                )?
            }
            (ReductionKind::HampathToCaterpillar, CertificateDoc::Solution(doc)) => {
                let sol = doc.to_solution(&inst.gadget)?;
                CertificateDoc::HamiltonianPath {
                    path: caterpillar_to_hampath(&inst, &sol)?,
                }
            }
            (ReductionKind::Pip3ToCactus, CertificateDoc::P3Partition { blocks }) => {
                let blocks: Vec<P3Block> =
                    blocks.into_iter().map(|path| P3Block { path }).collect();
                solved(&inst.gadget, &pip3_solution_to_cactus(&inst, &blocks)?)?
            }
            (ReductionKind::Pip3ToCactus, CertificateDoc::Solution(doc)) => {
                let sol = doc.to_solution(&inst.gadget)?;
                CertificateDoc::p3(&cactus_to_pip3_solution(&inst, &sol)?)
            }
            _ => return Err(mismatch()),
        }
    } else {
        let path = graph.expect("clap requires --instance or --graph");
        let (g, _) = read_graph(ctx, &path.to_string_lossy())?;
        match cert {
            CertificateDoc::DominatingSet { set } => {
                solved(&g, &domset_to_constellation(&g, &set)?)?
            }
            CertificateDoc::Solution(doc) if doc.label == ClassLabel::Constellation => {
                let sol = doc.to_solution(&g)?;
                CertificateDoc::DominatingSet {
                    set: constellation_to_domset(&g, &sol)?,
                }
            }
            _ => return Err(mismatch()),
        }
    };
    Ok(Output::solved(json(&out)))
}

fn predicate(args: PredicateArgs) -> Box<dyn ClassPredicate> {
    match (args.class, args.exec) {
        (Some(label), _) => Box::new(LabelPredicate(label)),
        (None, Some(cmd)) => Box::new(ExecPredicate::new(cmd)),
        (None, None) => unreachable!("clap requires --class or --exec"),
    }
}

fn oracle(ctx: &mut Context<'_>, command: OracleCommand) -> Result<Output, Failure> {
    let l = ctx.limits;
    match command {
        OracleCommand::Hampath { input } => {
            let (g, _) = read_graph(ctx, &input)?;
            let path = hamiltonian_path(&g, &l)?
                .ok_or_else(|| Failure::infeasible("no Hamiltonian path"))?;
            Ok(Output::solved(json(&CertificateDoc::HamiltonianPath {
                path,
            })))
        }
        OracleCommand::Domset { input } => {
            let (g, _) = read_graph(ctx, &input)?;
            let set = min_dominating_set(&g, &l)?;
            Ok(Output::solved(json(&CertificateDoc::DominatingSet { set })))
        }
        OracleCommand::Pip3 { input, induced } => {
            let (g, _) = read_graph(ctx, &input)?;
            let mode = if induced {
                P3Mode::Induced
            } else {
                P3Mode::Spanning
            };
            let blocks = partition_into_p3(&g, mode, &l)?
                .ok_or_else(|| Failure::infeasible("no partition into P3 blocks"))?;
            Ok(Output::solved(json(&CertificateDoc::p3(&blocks))))
        }
        OracleCommand::Matching { input } => {
            let (g, _) = read_graph(ctx, &input)?;
            #[derive(Serialize)]
            struct MatchingDoc {
                size: usize,
                matching: Vec<Edge>,
            }
            let matching = max_matching(&g);
            Ok(Output::solved(json(&MatchingDoc {
                size: matching.len(),
                matching,
            })))
        }
        OracleCommand::MaxSpanning {
            label,
            input,
            engine,
        } => {
            let (g, _) = read_graph(ctx, &input)?;
            let connected = match (engine, label) {
                (Engine::Auto, _) => None,
                (_, ClassLabel::Cactus) => Some(true),
                (_, ClassLabel::ForestOfCacti) => Some(false),
                _ => {
                    return Err(Failure::usage(
                        "--engine edges and cycles apply to cactus labels only",
                    ))
                }
            };
            let (sol, name) = match (engine, connected) {
                (Engine::Edges, Some(c)) => {
                    (max_spanning_cactus_by_edges(&g, c, &l)?, "oracle-edges")
                }
                (Engine::Cycles, Some(c)) => {
                    (max_spanning_cactus_by_cycles(&g, c, &l)?, "oracle-cycles")
                }
                _ => (max_spanning_in_class(&g, label, &l)?, "oracle"),
            };
            solution_output(&g, &sol, name, Extras::default())
        }
        OracleCommand::PiConditions {
            predicate: p,
            n_max,
            exhaustive_up_to,
            samples,
        } => {
            let pi = predicate(p);
            let probe = PiProbe {
                exhaustive_up_to,
                random_samples: samples,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let report = verify_pi_conditions(pi.as_ref(), n_max, &probe, &mut rng)?;
            Ok(Output::with_status(
                json(&PiReportDoc::new(&report)),
                report.passed(),
            ))
        }
        OracleCommand::PiEquiv {
            predicate: p,
            input,
        } => {
            let (g, _) = read_graph(ctx, &input)?;
            let pi = predicate(p);
            let e = pi_deletion_equiv_hampath(&g, pi.as_ref(), &l)?;
            Ok(Output::with_status(
                json(&EquivalenceDoc::new(&e)),
                e.agrees(),
            ))
        }
    }
}

/// The graph of the labeled catalog on `n` vertices with this edge mask
/// over the lexicographically ordered pairs.
fn catalog_graph(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p);
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("pairs are distinct")
}

fn generate(
    ctx: &mut Context<'_>,
    family: Family,
    n: usize,
    p: f64,
    index: Option<u64>,
) -> Result<Output, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let format = ctx.format;
    let (g, certified) = match family {
        Family::ChordalRandom => {
            let g = chordal_random(n, &mut rng);
            let ok = is_chordal(&g).is_accepted();
            (g, ok)
        }
        Family::QtRandom => {
            let g = qt_random(n, &mut rng);
            let ok = is_quasi_threshold(&g).is_accepted();
            (g, ok)
        }
        Family::BipartiteSubcubic => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::usage("--p must lie in [0, 1]"));
            }
            let g = bipartite_subcubic(n, p, &mut rng)
                .ok_or_else(|| Failure::usage("bipartite-subcubic needs n divisible by 3"))?;
            let ok = is_bipartite(&g).is_accepted() && is_subcubic(&g).is_accepted();
            (g, ok)
        }
        Family::LabeledCatalog => {
            let pairs = n * n.saturating_sub(1) / 2;
            if pairs >= 64 {
                return Err(Failure::usage(
                    "labeled-catalog supports at most 11 vertices",
                ));
            }
            match index {
                Some(i) if i >> pairs != 0 => {
                    return Err(Failure::usage(format!(
                        "index {i} is outside the catalog of 2^{pairs} graphs"
                    )))
                }
                Some(i) => (catalog_graph(n, i), true),
                None => {
                    if n > CATALOG_LISTING_VERTICES {
                        return Err(Failure::usage(format!(
                            "listing the catalog supports at most {CATALOG_LISTING_VERTICES} vertices; pass --index"
                        )));
                    }
                    if !matches!(format, Format::Auto | Format::Graph6) {
                        return Err(Failure::usage(
                            "the catalog listing is written as graph6 lines",
                        ));
                    }
                    let text: String = (0..1u64 << pairs)
                        .map(|mask| graph_text(&catalog_graph(n, mask), Format::Graph6))
                        .collect();
                    return Ok(Output::solved(text));
                }
            }
        }
    };
    if !certified {
        return Err(Failure::new(
            "self-check",
            "generated graph is outside its family",
        ));
    }
    let out = match format {
        Format::Auto => Format::EdgeList,
        f => f,
    };
    Ok(Output::solved(graph_text(&g, out)))
}
