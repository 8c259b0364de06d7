//! Command-line front door: build decks, reconstruct, verify, classify,
//! generate seeded fixtures, and run exhaustive preimage searches.
//!
//! Exit codes: 0 success, 1 algorithmic failure (reported with a structured
//! reason), 2 malformed input or I/O trouble. Reports are JSON on standard
//! output; prose goes to standard error. When an artifact (graph or deck
//! file) is routed to standard output, the report moves to standard error
//! so pipelines stay byte-clean.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde::Serialize;

use crate::deck::build_deck;
use crate::format::{
    parse_deck_json, parse_graph, read_input, write_deck_json, write_graph, write_output,
    DeckWriteOptions, FormatError, GraphFormat,
};
use crate::graph::Graph;
use crate::oracle::{
    deck_preimages, random_class_u, random_connected_unicyclic, EnumerationSpec, Family,
};
use crate::reconstruct::{reconstruct, verify};
use crate::unicyclic::{decompose, in_class_u, unique_branches};

#[derive(Parser)]
#[command(
    name = "unideck",
    version,
    about = "Edge decks of unicyclic graphs: build, reconstruct, verify, enumerate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the edge deck of a graph
    Deck(DeckArgs),
    /// Recover the unique graph whose deck is the input
    Reconstruct(ReconstructArgs),
    /// Check that a graph's deck equals a deck file
    Verify(VerifyArgs),
    /// Decompose a unicyclic graph and report class diagnostics
    Classify(ClassifyArgs),
    /// Generate a seeded random graph
    Gen(GenArgs),
    /// Exhaustively list the graphs whose deck equals the input
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, Default)]
enum FormatArg {
    #[default]
    EdgeList,
    Json,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::EdgeList => GraphFormat::EdgeList,
            FormatArg::Json => GraphFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenFamilyArg {
    ClassU,
    ConnectedUnicyclic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleFamilyArg {
    AllGraphs,
    ConnectedUnicyclic,
    ClassU,
}

impl From<OracleFamilyArg> for Family {
    fn from(f: OracleFamilyArg) -> Family {
        match f {
            OracleFamilyArg::AllGraphs => Family::AllGraphs,
            OracleFamilyArg::ConnectedUnicyclic => Family::ConnectedUnicyclic,
            OracleFamilyArg::ClassU => Family::ClassU,
        }
    }
}

#[derive(Args)]
struct DeckArgs {
    /// Graph file ("-" for standard input)
    input: String,
    /// Deck file to write ("-" for standard output)
    #[arg(short, long, default_value = "-")]
    output: String,
    /// Input graph format
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
    /// Embed each card's edge list in the deck file
    #[arg(long)]
    debug_cards: bool,
    /// Collapse repeated cards into one entry with a count
    #[arg(long)]
    set_mode: bool,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Deck file ("-" for standard input)
    input: String,
    /// Graph file to write ("-" for standard output)
    #[arg(short, long, default_value = "-")]
    output: String,
    /// Output graph format
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Deck file
    deck: String,
    /// Graph file
    graph: String,
    /// Graph file format
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Graph file ("-" for standard input)
    input: String,
    /// Input graph format
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct GenArgs {
    /// Vertex count
    #[arg(long)]
    n: usize,
    /// Random seed (echoed in the report)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Which family to sample
    #[arg(long, value_enum, default_value = "class-u")]
    family: GenFamilyArg,
    /// Graph file to write ("-" for standard output)
    #[arg(short, long, default_value = "-")]
    output: String,
    /// Output graph format
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct OracleArgs {
    /// Deck file ("-" for standard input)
    input: String,
    /// Family to search
    #[arg(long, value_enum, default_value = "connected-unicyclic")]
    family: OracleFamilyArg,
    /// Lower the family's built-in size ceiling
    #[arg(long)]
    max_n_guard: Option<usize>,
}

/// Parses the process arguments, runs one command, and returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, FormatError> {
    match cmd {
        Command::Deck(a) => cmd_deck(a),
        Command::Reconstruct(a) => cmd_reconstruct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Oracle(a) => cmd_oracle(a),
    }
}

fn emit<T: Serialize>(report: &T, to_stderr: bool) {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    if to_stderr {
        eprint!("{s}");
    } else {
        print!("{s}");
    }
}

#[derive(Serialize)]
struct FailureReport<'a> {
    command: &'a str,
    ok: bool,
    kind: &'a str,
    reason: String,
}

fn fail(command: &str, kind: &str, reason: String) -> Result<i32, FormatError> {
    emit(&FailureReport { command, ok: false, kind, reason: reason.clone() }, false);
    eprintln!("{command}: {reason}");
    Ok(1)
}

fn cmd_deck(a: DeckArgs) -> Result<i32, FormatError> {
    let g = parse_graph(&read_input(&a.input)?, a.format.into())?;
    let deck = match build_deck(&g) {
        Ok(d) => d,
        Err(e) => return fail("deck", "empty-graph", e.to_string()),
    };
    let opts = DeckWriteOptions { debug_cards: a.debug_cards, set_mode: a.set_mode };
    write_output(&a.output, &write_deck_json(&deck, opts))?;
    eprintln!("deck: {} cards (n = {})", deck.m(), deck.n());
    Ok(0)
}

fn cmd_reconstruct(a: ReconstructArgs) -> Result<i32, FormatError> {
    let deck = parse_deck_json(&read_input(&a.input)?)?;
    let g = match reconstruct(&deck) {
        Ok(g) => g,
        Err(e) => {
            let kind = match &e {
                crate::reconstruct::ReconstructError::Ambiguous { .. } => "ambiguous",
                _ => "not-reconstructable",
            };
            return fail("reconstruct", kind, e.to_string());
        }
    };
    write_output(&a.output, &write_graph(&g, a.format.into()))?;
    eprintln!("reconstruct: n = {}, m = {}", g.n(), g.m());
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    n: usize,
    m: usize,
    r#match: bool,
}

fn cmd_verify(a: VerifyArgs) -> Result<i32, FormatError> {
    let deck = parse_deck_json(&read_input(&a.deck)?)?;
    let g = parse_graph(&read_input(&a.graph)?, a.format.into())?;
    let ok = verify(&deck, &g);
    emit(&VerifyReport { command: "verify", n: deck.n(), m: deck.m(), r#match: ok }, false);
    eprintln!("verify: {}", if ok { "decks match" } else { "decks differ" });
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct BranchReport {
    cert: String,
    count: usize,
}

#[derive(Serialize)]
struct ClassifyReport {
    command: &'static str,
    n: usize,
    m: usize,
    cycle_length: usize,
    ucd: usize,
    branches: Vec<BranchReport>,
    unique_branches: Vec<String>,
    class_u: bool,
    diagnostic: String,
}

fn cmd_classify(a: ClassifyArgs) -> Result<i32, FormatError> {
    let g = parse_graph(&read_input(&a.input)?, a.format.into())?;
    let d = match decompose(&g) {
        Ok(d) => d,
        Err(e) => return fail("classify", "not-unicyclic", e.to_string()),
    };
    let mut counts: std::collections::BTreeMap<String, usize> = std::collections::BTreeMap::new();
    for b in d.branches() {
        *counts.entry(b.certificate().to_hex()).or_default() += 1;
    }
    let (is_class_u, diag) = in_class_u(&g);
    let report = ClassifyReport {
        command: "classify",
        n: g.n(),
        m: g.m(),
        cycle_length: d.cycle().len(),
        ucd: d.branches().len(),
        branches: counts.into_iter().map(|(cert, count)| BranchReport { cert, count }).collect(),
        unique_branches: unique_branches(&d).iter().map(|b| b.certificate().to_hex()).collect(),
        class_u: is_class_u,
        diagnostic: diag.to_string(),
    };
    emit(&report, false);
    eprintln!(
        "classify: ucd={}, cycle length={}, class-U: {}{}",
        report.ucd,
        report.cycle_length,
        report.class_u,
        if report.class_u { String::new() } else { format!(" ({})", report.diagnostic) }
    );
    Ok(0)
}

#[derive(Serialize)]
struct GenReport {
    command: &'static str,
    family: String,
    n: usize,
    m: usize,
    seed: u64,
}

fn cmd_gen(a: GenArgs) -> Result<i32, FormatError> {
    let g: Graph = match a.family {
        GenFamilyArg::ClassU => match random_class_u(a.n, a.seed) {
            Ok(g) => g,
            Err(e) => return fail("gen", "budget-infeasible", e.to_string()),
        },
        GenFamilyArg::ConnectedUnicyclic => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.seed);
            match random_connected_unicyclic(a.n, &mut rng) {
                Ok(g) => g,
                Err(e) => return fail("gen", "budget-infeasible", e.to_string()),
            }
        }
    };
    write_output(&a.output, &write_graph(&g, a.format.into()))?;
    let family = match a.family {
        GenFamilyArg::ClassU => "class-u",
        GenFamilyArg::ConnectedUnicyclic => "connected-unicyclic",
    };
    let report = GenReport {
        command: "gen",
        family: family.into(),
        n: g.n(),
        m: g.m(),
        seed: a.seed,
    };
    // Keep the artifact stream clean when it occupies standard output.
    emit(&report, a.output == "-");
    Ok(0)
}

#[derive(Serialize)]
struct OracleReport {
    command: &'static str,
    family: String,
    n: usize,
    preimages: usize,
    matches: Vec<MatchReport>,
}

#[derive(Serialize)]
struct MatchReport {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn cmd_oracle(a: OracleArgs) -> Result<i32, FormatError> {
    let deck = parse_deck_json(&read_input(&a.input)?)?;
    let mut spec = EnumerationSpec {
        family: a.family.into(),
        n: deck.n(),
        edge_count: None,
        max_n_guard: None,
    };
    if let Some(guard) = a.max_n_guard {
        spec = spec.with_guard(guard);
    }
    let preimages = match deck_preimages(&deck, &spec) {
        Ok(p) => p,
        Err(e) => return fail("oracle", "oracle-error", e.to_string()),
    };
    let family: Family = a.family.into();
    let report = OracleReport {
        command: "oracle",
        family: family.to_string(),
        n: deck.n(),
        preimages: preimages.len(),
        matches: preimages
            .iter()
            .map(|g| MatchReport { n: g.n(), edges: g.edges().to_vec() })
            .collect(),
    };
    emit(&report, false);
    eprintln!("oracle: {} preimage(s) in the {} family", report.preimages, report.family);
    Ok(0)
}
