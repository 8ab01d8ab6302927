//! Command-line front end: computes boxicity parameters with verifying
//! certificates, checks certificates, converts between covers and box
//! representations, recognizes interval-related classes, and generates
//! named graph families.
//!
//! Every command writes one JSON document to standard output; diagnostics
//! go to standard error. Exit codes: 0 success, 1 invalid input, 2
//! verification failure, 3 size or time budget exceeded (with the best
//! known bounds on standard output where the solver produced any).

use boxicity::acyclic::acyclic_chromatic_number;
use boxicity::boxes::{
    boxes_to_cover, cover_to_boxes, intersection_graph_of_boxes, BoxRepresentation,
};
use boxicity::certificate::{Certificate, CoverBody, Parameter};
use boxicity::cover::verify_cover;
use boxicity::graph6::{parse_graph6, write_graph6, EdgeList};
use boxicity::interval::{is_chordal, is_co_interval, is_interval, is_union_co_interval};
use boxicity::solver::{self, Outcome, SolveOptions};
use boxicity::{families, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Read;
use std::path::Path;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "boxicity",
    version,
    about = "Exact boxicity, local boxicity, and union boxicity with certificates"
)]
struct Cli {
    /// Wall-clock budget in seconds for the exact solvers; past it the
    /// solver commands report bounds and exit 3.
    #[arg(long, global = true, default_value_t = 60)]
    time_budget_seconds: u64,

    /// Graph input format for the compute commands and output format for
    /// `gen`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,

    /// Reserved for sampling workflows; accepted and currently unused.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

/// Graph arguments are a graph6 literal, a path to an existing file, or
/// `-` for standard input; certificate and representation arguments are a
/// JSON literal, a path, or `-`.
#[derive(Subcommand)]
enum Command {
    /// Exact boxicity, emitted as a certificate with its witness cover.
    Box { input: String },
    /// Exact local boxicity, emitted as a certificate.
    Localbox {
        input: String,
        /// Bag class for the witness cover: plain co-interval (C) or
        /// disjoint unions of co-interval graphs (Cbar). The value is the
        /// same either way.
        #[arg(long, value_enum, default_value_t = ClassArg::C)]
        class: ClassArg,
    },
    /// Exact union boxicity, emitted as a certificate.
    Unionbox { input: String },
    /// Folded boxicity: {"value": 1} or {"value": "infinity"}.
    Boxf { input: String },
    /// Exact acyclic chromatic number with a witness coloring.
    Chia { input: String },
    /// Class membership of the input graph itself.
    Recognize { input: String },
    /// Emit a named family member: matching K, complete N, cycle N,
    /// octahedron, line-of-complete N, petersen, projective-incidence Q.
    Gen {
        family: String,
        param: Option<usize>,
    },
    /// Check a certificate; exits 0 with its statistics iff it verifies.
    Verify { input: String },
    /// Convert a verified certificate's cover to a box representation.
    Boxes { input: String },
    /// Project a box representation onto its coordinates, emitting a
    /// plain-cover certificate for its intersection graph.
    Project { input: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One graph6 string.
    Graph6,
    /// {"n": int, "edges": [[u, v], ...]}
    EdgelistJson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    #[value(name = "C")]
    C,
    #[value(name = "Cbar")]
    Cbar,
}

enum Fail {
    Input(String),
    Verify(String),
    Size(String),
}

impl Fail {
    fn code(&self) -> i32 {
        match self {
            Fail::Input(_) => 1,
            Fail::Verify(_) => 2,
            Fail::Size(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Fail::Input(m) | Fail::Verify(m) | Fail::Size(m) => m,
        }
    }
}

fn size_related(e: &boxicity::Error) -> bool {
    matches!(
        e,
        boxicity::Error::TooManyVertices(_)
            | boxicity::Error::Graph6TooLarge(_)
            | boxicity::Error::SizeLimit(_)
    )
}

fn input_fail(e: boxicity::Error) -> Fail {
    if size_related(&e) {
        Fail::Size(e.to_string())
    } else {
        Fail::Input(e.to_string())
    }
}

fn verify_fail(e: boxicity::Error) -> Fail {
    if size_related(&e) {
        Fail::Size(e.to_string())
    } else {
        Fail::Verify(format!("does not verify: {e}"))
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("{}", f.message());
            f.code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Fail> {
    let fmt = cli.format;
    let secs = cli.time_budget_seconds;
    match cli.command {
        Command::Box { input } => {
            let h = load_graph(&input, fmt)?;
            solve_and_emit(&h, Parameter::Box, secs, solver::boxicity_with)
        }
        Command::Localbox { input, class } => {
            let h = load_graph(&input, fmt)?;
            match class {
                ClassArg::C => {
                    solve_and_emit(&h, Parameter::LocalBox, secs, solver::local_boxicity_with)
                }
                ClassArg::Cbar => solve_and_emit(
                    &h,
                    Parameter::LocalBox,
                    secs,
                    solver::local_boxicity_union_class_with,
                ),
            }
        }
        Command::Unionbox { input } => {
            let h = load_graph(&input, fmt)?;
            solve_and_emit(&h, Parameter::UnionBox, secs, solver::union_boxicity_with)
        }
        Command::Boxf { input } => {
            let h = load_graph(&input, fmt)?;
            let value = match solver::box_f(&h) {
                Some(v) => json!(v),
                None => json!("infinity"),
            };
            emit(json!({ "value": value }));
            Ok(0)
        }
        Command::Chia { input } => {
            let h = load_graph(&input, fmt)?;
            let (_, coloring) = acyclic_chromatic_number(&h).map_err(input_fail)?;
            emit(serde_json::to_value(coloring).expect("coloring serializes"));
            Ok(0)
        }
        Command::Recognize { input } => {
            let h = load_graph(&input, fmt)?;
            emit(json!({
                "interval": is_interval(&h),
                "co_interval": is_co_interval(&h),
                "union_co_interval": is_union_co_interval(&h),
                "chordal": is_chordal(&h),
            }));
            Ok(0)
        }
        Command::Gen { family, param } => {
            let g = build_family(&family, param)?;
            match fmt {
                Format::Graph6 => emit(json!({
                    "graph6": write_graph6(&g).map_err(input_fail)?,
                    "n": g.n(),
                    "m": g.edge_count(),
                })),
                Format::EdgelistJson => emit(
                    serde_json::to_value(EdgeList::from_graph(&g)).expect("edge list serializes"),
                ),
            }
            Ok(0)
        }
        Command::Verify { input } => {
            let cert = load_certificate(&input)?;
            let stats = cert.verify().map_err(verify_fail)?;
            emit(serde_json::to_value(stats).expect("stats serialize"));
            Ok(0)
        }
        Command::Boxes { input } => {
            let cert = load_certificate(&input)?;
            cert.verify().map_err(verify_fail)?;
            let cover = cert.cover().map_err(verify_fail)?;
            let rep = cover_to_boxes(&cover).map_err(verify_fail)?;
            emit(serde_json::to_value(rep).expect("representation serializes"));
            Ok(0)
        }
        Command::Project { input } => {
            let text = read_source(&input)?;
            let rep: BoxRepresentation = serde_json::from_str(&text)
                .map_err(|e| Fail::Input(format!("box representation JSON: {e}")))?;
            let h = intersection_graph_of_boxes(&rep).map_err(input_fail)?;
            let cover = boxes_to_cover(&rep).map_err(input_fail)?;
            let stats = verify_cover(&cover).map_err(verify_fail)?;
            let cert = Certificate {
                parameter: Parameter::Box,
                value: stats.globality,
                host_graph6: write_graph6(&h).map_err(input_fail)?,
                complement_cover: CoverBody {
                    class: cover.class,
                    bags: cover.bags,
                },
                stats,
            };
            emit(serde_json::to_value(cert).expect("certificate serializes"));
            Ok(0)
        }
    }
}

fn solve_and_emit(
    h: &Graph,
    parameter: Parameter,
    secs: u64,
    run: impl Fn(&Graph, &SolveOptions) -> Outcome,
) -> Result<i32, Fail> {
    let opts = SolveOptions {
        time_budget: Some(Duration::from_secs(secs)),
    };
    match run(h, &opts) {
        Outcome::Exact(sol) => {
            let cert = Certificate::from_solution(parameter, h, &sol).map_err(verify_fail)?;
            emit(serde_json::to_value(cert).expect("certificate serializes"));
            Ok(0)
        }
        Outcome::Budget(b) => {
            emit(json!({ "lower": b.lower, "upper": b.upper }));
            Ok(3)
        }
    }
}

fn emit(doc: serde_json::Value) {
    println!("{doc}");
}

fn read_source(input: &str) -> Result<String, Fail> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Fail::Input(format!("standard input: {e}")))?;
        Ok(s)
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| Fail::Input(format!("{input}: {e}")))
    } else {
        Ok(input.to_string())
    }
}

fn load_graph(input: &str, fmt: Format) -> Result<Graph, Fail> {
    let text = read_source(input)?;
    match fmt {
        Format::Graph6 => parse_graph6(text.trim()).map_err(input_fail),
        Format::EdgelistJson => {
            let doc: EdgeList = serde_json::from_str(&text)
                .map_err(|e| Fail::Input(format!("edge-list JSON: {e}")))?;
            doc.to_graph().map_err(input_fail)
        }
    }
}

fn load_certificate(input: &str) -> Result<Certificate, Fail> {
    let text = read_source(input)?;
    serde_json::from_str(&text).map_err(|e| Fail::Input(format!("certificate JSON: {e}")))
}

fn build_family(name: &str, param: Option<usize>) -> Result<Graph, Fail> {
    let need = param.ok_or_else(|| Fail::Input(format!("family {name:?} needs a parameter")));
    let bare = |g: Graph| match param {
        Some(_) => Err(Fail::Input(format!("family {name:?} takes no parameter"))),
        None => Ok(g),
    };
    match name {
        "matching" => families::matching(need?).map_err(input_fail),
        "complete" => families::complete(need?).map_err(input_fail),
        "cycle" => families::cycle(need?).map_err(input_fail),
        "octahedron" => bare(families::octahedron()),
        "line-of-complete" => families::line_of_complete(need?).map_err(input_fail),
        "petersen" => bare(families::petersen()),
        "projective-incidence" => families::projective_incidence(need?).map_err(input_fail),
        _ => Err(Fail::Input(format!("unknown family {name:?}"))),
    }
}
