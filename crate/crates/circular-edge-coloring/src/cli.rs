//! Command-line surface: load graphs, run the coloring pipeline, verify
//! colorings, compute exact indices, decompose maps, generate test graphs
//! and analyze structure.
//!
//! Inputs are file paths or generator pseudo-paths: `gen:heawood`,
//! `gen:gp:7:2`, `gen:rand:n=20,g=6,seed=1` (the `gen:` prefix may be
//! dropped for the `generate` command's spec argument). Graph files are
//! plain edge lists by default; graph6 is selected by `--format g6`, a
//! `.g6` extension, or a `>>graph6<<` header.
//!
//! Every document written by a command is re-parsed and re-verified
//! before the process exits 0.
//!
//! Exit codes: 0 success; 1 usage, I/O or parse errors; 2 odd-girth below
//! 7; 3 no admissible 2-factor; 4 verification failure; 5 other domain
//! errors (forbidden degrees, exhausted searches, budget limits).

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::coloring::{self, ColoringError};
use crate::formats;
use crate::generators;
use crate::graph::{analyze, MultiGraph};
use crate::matching;
use crate::oracle;
use crate::rotation::{contract_two_factor, RotationMap};
use crate::trails;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Parse(String),
    #[error("odd-girth {odd_girth} is below 7; the coloring construction does not apply")]
    OddGirthTooSmall { odd_girth: usize },
    #[error("{0}")]
    Inadmissible(String),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 1,
            CliError::OddGirthTooSmall { .. } => 2,
            CliError::Inadmissible(_) => 3,
            CliError::VerifyFailed(_) => 4,
            CliError::Domain(_) => 5,
        }
    }
}

impl From<formats::FormatError> for CliError {
    fn from(e: formats::FormatError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::OddGirthTooSmall { odd_girth } => {
                CliError::OddGirthTooSmall { odd_girth }
            }
            ColoringError::InadmissibleTwoFactor { .. } => CliError::Inadmissible(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormatArg {
    /// Plain `n m` edge list.
    Edges,
    /// graph6 (simple graphs only).
    G6,
    /// Rotation map document (decompose only).
    Map,
}

/// Circular (7,2) edge-colorings of (sub)cubic graphs, with verifiers and
/// exact oracles.
#[derive(Debug, Parser)]
#[command(name = "cec", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a cubic or subcubic graph with a (7,2)-circular edge-coloring.
    Color {
        /// Input file or generator spec (gen:...).
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormatArg>,
        /// Perfect-matching enumeration budget for the admissible 2-factor search.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Check a coloring document against a graph.
    Verify {
        input: String,
        coloring: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormatArg>,
    },
    /// Exact circular chromatic index by rational search.
    Index {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormatArg>,
        /// Largest numerator tried (default: the edge count).
        #[arg(long)]
        p_max: Option<usize>,
        /// Remove the search-size guard for expensive instances.
        #[arg(long)]
        slow: bool,
    },
    /// Compatible trail decomposition of a map or contracted cubic graph.
    Decompose {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormatArg>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Emit a catalog or random graph.
    Generate {
        /// Generator spec: heawood, gp:7:2, rand:n=20,g=6,seed=1, ...
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormatArg>,
        /// Overrides the seed of a rand: spec.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the structure report of a graph.
    Analyze {
        input: String,
        #[arg(long, value_enum)]
        format: Option<GraphFormatArg>,
    },
}

/// Guard for `index` without `--slow`: per-candidate search nodes.
const FAST_INDEX_NODE_BUDGET: u64 = 2_000_000;

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Color {
            input,
            out,
            format,
            budget,
        } => cmd_color(&input, out, format, budget, stdout),
        Command::Verify {
            input,
            coloring,
            format,
        } => cmd_verify(&input, &coloring, format, stdout),
        Command::Index {
            input,
            out,
            format,
            p_max,
            slow,
        } => cmd_index(&input, out, format, p_max, slow, stdout),
        Command::Decompose {
            input,
            out,
            format,
            budget,
        } => cmd_decompose(&input, out, format, budget, stdout),
        Command::Generate {
            spec,
            out,
            format,
            seed,
        } => cmd_generate(&spec, out, format, seed, stdout),
        Command::Analyze { input, format } => cmd_analyze(&input, format, stdout),
    }
}

fn emit(text: &str, out: Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Input loading

fn load_graph(input: &str, format: Option<GraphFormatArg>) -> Result<MultiGraph, CliError> {
    if let Some(spec) = input.strip_prefix("gen:") {
        return generate_graph(spec, None);
    }
    let text = fs::read_to_string(input)?;
    match resolve_format(input, format, &text)? {
        GraphFormatArg::Edges => Ok(formats::parse_edge_list(&text)?),
        GraphFormatArg::G6 => Ok(formats::parse_graph6(&text)?),
        GraphFormatArg::Map => Err(CliError::Parse(
            "rotation maps are only accepted by `decompose`".into(),
        )),
    }
}

fn resolve_format(
    path: &str,
    format: Option<GraphFormatArg>,
    text: &str,
) -> Result<GraphFormatArg, CliError> {
    if let Some(f) = format {
        return Ok(f);
    }
    if path.ends_with(".g6") || text.trim_start().starts_with(">>graph6<<") {
        return Ok(GraphFormatArg::G6);
    }
    if text.trim_start().starts_with("map ") {
        return Ok(GraphFormatArg::Map);
    }
    Ok(GraphFormatArg::Edges)
}

fn generate_graph(spec: &str, seed_override: Option<u64>) -> Result<MultiGraph, CliError> {
    let spec = spec.strip_prefix("gen:").unwrap_or(spec);
    if let Some(rest) = spec.strip_prefix("gp:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let [n, k] = parts.as_slice() else {
            return Err(CliError::Parse(format!("expected gp:<n>:<k>, got {spec:?}")));
        };
        let n = parse_num(n, "gp n")?;
        let k = parse_num(k, "gp k")?;
        return generators::generalized_petersen(n, k)
            .map_err(|e| CliError::Parse(e.to_string()));
    }
    if let Some(rest) = spec.strip_prefix("rand:") {
        let mut n: Option<usize> = None;
        let mut girth = 6usize;
        let mut seed = 0u64;
        let mut attempts = generators::DEFAULT_GENERATION_ATTEMPTS;
        for item in rest.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("expected key=value, got {item:?}")))?;
            match key {
                "n" => n = Some(parse_num(value, "rand n")?),
                "g" => girth = parse_num(value, "rand g")?,
                "seed" => seed = parse_num(value, "rand seed")? as u64,
                "attempts" => attempts = parse_num(value, "rand attempts")?,
                other => {
                    return Err(CliError::Parse(format!("unknown rand key {other:?}")));
                }
            }
        }
        let n = n.ok_or_else(|| CliError::Parse("rand spec needs n=<even>".into()))?;
        let seed = seed_override.unwrap_or(seed);
        return generators::random_cubic_bridgeless_with_budget(n, girth, seed, attempts)
            .ok_or_else(|| {
                CliError::Domain(format!(
                    "no cubic bridgeless graph with girth >= {girth} on {n} vertices found \
                     within {attempts} attempts"
                ))
            });
    }
    generators::named(spec)
        .map(|named| named.graph)
        .map_err(|e| CliError::Parse(e.to_string()))
}

fn parse_num(token: &str, what: &str) -> Result<usize, CliError> {
    token
        .parse()
        .map_err(|_| CliError::Parse(format!("{what}: expected an integer, got {token:?}")))
}

// ---------------------------------------------------------------------
// Commands

fn cmd_color(
    input: &str,
    out: Option<PathBuf>,
    format: Option<GraphFormatArg>,
    budget: Option<usize>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let graph = load_graph(input, format)?;
    let report = analyze(&graph);
    let coloring = if report.is_cubic {
        let budget = budget.unwrap_or(matching::DEFAULT_MATCHING_BUDGET);
        let tf = matching::admissible_two_factor_with_budget(&graph, budget)
            .map_err(|e| CliError::Domain(e.to_string()))?;
        match tf {
            Some(tf) => coloring::color_cubic(&graph, &tf)?,
            None => {
                // Name the offending cycle lengths of the first factor.
                let detail = matching::perfect_matching(&graph)
                    .and_then(|m| matching::two_factor(&graph, &m).ok())
                    .map(|tf| format!("e.g. cycle lengths {:?}", tf.cycle_lengths()))
                    .unwrap_or_else(|| "no perfect matching exists".into());
                return Err(CliError::Inadmissible(format!(
                    "every 2-factor tried contains a 3- or 5-cycle ({detail})"
                )));
            }
        }
    } else if report.is_subcubic {
        coloring::color_subcubic(&graph)?
    } else {
        let v = (0..graph.vertex_count())
            .find(|&v| graph.degree(v) > 3)
            .expect("some vertex exceeds degree 3");
        return Err(CliError::Domain(format!(
            "graph is not subcubic: vertex {v} has degree {}",
            graph.degree(v)
        )));
    };

    let text = formats::write_coloring(&coloring);
    // Self-check: re-parse and re-verify before writing.
    let reparsed = formats::parse_coloring(&text)?;
    oracle::verify_pq(&graph, &reparsed.colors, reparsed.p, reparsed.q)
        .map_err(|v| CliError::Domain(format!("self-check failed: {v}")))?;
    emit(&text, out, stdout)
}

fn cmd_verify(
    input: &str,
    coloring_path: &PathBuf,
    format: Option<GraphFormatArg>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let graph = load_graph(input, format)?;
    let document = fs::read_to_string(coloring_path)?;
    let coloring = formats::parse_coloring(&document)?;
    if coloring.colors.len() != graph.edge_count() {
        return Err(CliError::Domain(format!(
            "coloring covers {} edges but the graph has {}",
            coloring.colors.len(),
            graph.edge_count()
        )));
    }
    match oracle::verify_pq(&graph, &coloring.colors, coloring.p, coloring.q) {
        Ok(()) => {
            writeln!(stdout, "pass")?;
            Ok(())
        }
        Err(violation) => Err(CliError::VerifyFailed(violation.to_string())),
    }
}

fn cmd_index(
    input: &str,
    out: Option<PathBuf>,
    format: Option<GraphFormatArg>,
    p_max: Option<usize>,
    slow: bool,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let graph = load_graph(input, format)?;
    if graph.edge_count() == 0 {
        return Err(CliError::Domain("index needs at least one edge".into()));
    }
    let p_max = p_max.unwrap_or(graph.edge_count());
    let node_budget = if slow { None } else { Some(FAST_INDEX_NODE_BUDGET) };
    let (fraction, witness) = oracle::exact_index(&graph, p_max, node_budget).map_err(|e| {
        match e {
            oracle::OracleError::NodeBudgetExceeded { .. } => CliError::Domain(format!(
                "{e}; rerun with --slow to lift the guard"
            )),
            other => CliError::Domain(other.to_string()),
        }
    })?;
    let mut text = format!("index {fraction}\n");
    text.push_str(&formats::write_coloring(&witness));
    // Self-check the witness before writing.
    let body = text
        .split_once('\n')
        .map(|(_, rest)| rest)
        .expect("index line");
    let reparsed = formats::parse_coloring(body)?;
    oracle::verify_pq(&graph, &reparsed.colors, reparsed.p, reparsed.q)
        .map_err(|v| CliError::Domain(format!("self-check failed: {v}")))?;
    emit(&text, out, stdout)
}

fn cmd_decompose(
    input: &str,
    out: Option<PathBuf>,
    format: Option<GraphFormatArg>,
    budget: Option<usize>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let map = load_map_or_contract(input, format, budget)?;
    let decomposition = trails::decompose(&map).map_err(|e| CliError::Domain(e.to_string()))?;
    trails::check_compatibility(&map, &decomposition)
        .map_err(|v| CliError::Domain(format!("self-check failed: {v}")))?;
    let text = formats::write_decomposition(&decomposition);
    // Self-check: re-parse against the map and re-verify compatibility.
    let reparsed = formats::parse_decomposition(&text, &map)?;
    trails::check_compatibility(&map, &reparsed)
        .map_err(|v| CliError::Domain(format!("self-check failed after reparse: {v}")))?;
    emit(&text, out, stdout)
}

fn load_map_or_contract(
    input: &str,
    format: Option<GraphFormatArg>,
    budget: Option<usize>,
) -> Result<RotationMap, CliError> {
    if !input.starts_with("gen:") {
        let text = fs::read_to_string(input)?;
        if matches!(resolve_format(input, format, &text)?, GraphFormatArg::Map) {
            return Ok(formats::parse_rotation_map(&text)?);
        }
    }
    let graph = load_graph(input, format)?;
    // An admissible 2-factor when one exists; otherwise fall back to the
    // first perfect matching and let forbidden degrees surface.
    let budget = budget.unwrap_or(matching::DEFAULT_MATCHING_BUDGET);
    let tf = match matching::admissible_two_factor_with_budget(&graph, budget)
        .map_err(|e| CliError::Domain(e.to_string()))?
    {
        Some(tf) => tf,
        None => {
            let m = matching::perfect_matching(&graph).ok_or_else(|| {
                CliError::Domain("graph has no perfect matching to contract".into())
            })?;
            matching::two_factor(&graph, &m).map_err(|e| CliError::Domain(e.to_string()))?
        }
    };
    let (map, _) = contract_two_factor(&graph, &tf).map_err(|e| CliError::Domain(e.to_string()))?;
    Ok(map)
}

fn cmd_generate(
    spec: &str,
    out: Option<PathBuf>,
    format: Option<GraphFormatArg>,
    seed: Option<u64>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let graph = generate_graph(spec, seed)?;
    let text = match format {
        Some(GraphFormatArg::G6) => {
            let line = formats::write_graph6(&graph).map_err(|e| CliError::Domain(e.to_string()))?;
            format!("{line}\n")
        }
        Some(GraphFormatArg::Map) => {
            return Err(CliError::Parse("generate emits graphs, not maps".into()))
        }
        _ => formats::write_edge_list(&graph),
    };
    // Self-check: the emitted document parses back to the same graph.
    let reparsed = match format {
        Some(GraphFormatArg::G6) => formats::parse_graph6(&text)?,
        _ => formats::parse_edge_list(&text)?,
    };
    let same_edges = |a: &MultiGraph, b: &MultiGraph| {
        let norm = |g: &MultiGraph| {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect();
            e.sort_unstable();
            e
        };
        a.vertex_count() == b.vertex_count() && norm(a) == norm(b)
    };
    if !same_edges(&graph, &reparsed) {
        return Err(CliError::Domain("self-check failed: reparse mismatch".into()));
    }
    emit(&text, out, stdout)
}

fn cmd_analyze(
    input: &str,
    format: Option<GraphFormatArg>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let graph = load_graph(input, format)?;
    let report = analyze(&graph);
    let mut text = String::new();
    let _ = writeln!(text, "vertices {}", graph.vertex_count());
    let _ = writeln!(text, "edges {}", graph.edge_count());
    let _ = writeln!(text, "max-degree {}", report.max_degree);
    let _ = writeln!(text, "min-degree {}", report.min_degree);
    let _ = writeln!(text, "cubic {}", report.is_cubic);
    let _ = writeln!(text, "subcubic {}", report.is_subcubic);
    match report.girth {
        Some(g) => drop(writeln!(text, "girth {g}")),
        None => drop(writeln!(text, "girth acyclic")),
    }
    match report.odd_girth {
        Some(g) => drop(writeln!(text, "odd-girth {g}")),
        None => drop(writeln!(text, "odd-girth none")),
    }
    let _ = writeln!(text, "connected {}", report.is_connected);
    let _ = writeln!(text, "bridgeless {}", report.is_bridgeless);
    let bridges: Vec<String> = report.bridges.iter().map(usize::to_string).collect();
    let _ = writeln!(text, "bridges {}", bridges.join(" "));
    stdout.write_all(text.as_bytes())?;
    Ok(())
}
