//! File formats: edge-list text and a JSON object form for graphs, JSON
//! documents for decks, and atomic file writes.
//!
//! Writers are canonical (fixed ordering, LF line ends) so that equal
//! objects serialize to identical bytes; parsers accept edges in any order
//! and normalize.

use std::fs;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{graph_certificate, materialize, CertError, Certificate};
use crate::deck::{Deck, DeckError};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Cert(#[from] CertError),
    #[error("{0}")]
    Deck(#[from] DeckError),
    #[error("{0}")]
    Invalid(String),
}

/// Graph serialization formats the CLI can speak.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

/// Canonical edge-list text: "n m" header, then one "u v" line per edge
/// with u < v, pairs in ascending order, LF terminated.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses edge-list text. Edge order and endpoint order within a line are
/// normalized; counts must match the header exactly.
pub fn parse_edge_list(s: &str) -> Result<Graph, FormatError> {
    let mut lines = s
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| FormatError::Parse { line: 1, msg: "empty input".into() })?;
    let parse_pair = |line: usize, text: &str| -> Result<(usize, usize), FormatError> {
        let mut it = text.split_whitespace();
        let err = |msg: &str| FormatError::Parse { line: line + 1, msg: msg.into() };
        let a = it
            .next()
            .ok_or_else(|| err("expected two integers"))?
            .parse::<usize>()
            .map_err(|_| err("expected two integers"))?;
        let b = it
            .next()
            .ok_or_else(|| err("expected two integers"))?
            .parse::<usize>()
            .map_err(|_| err("expected two integers"))?;
        if it.next().is_some() {
            return Err(err("trailing tokens"));
        }
        Ok((a, b))
    };
    let (n, m) = parse_pair(lineno, header)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        edges.push(parse_pair(lineno, line)?);
    }
    if edges.len() != m {
        return Err(FormatError::Parse {
            line: lineno + 1,
            msg: format!("header claims {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

#[derive(Serialize, Deserialize, Clone)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// The JSON object form {"n": ..., "edges": [[u, v], ...]} with the same
/// ordering rules as the edge-list text.
pub fn write_graph_json(g: &Graph) -> String {
    let doc = GraphDoc { n: g.n(), edges: g.edges().to_vec() };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph doc serializes");
    s.push('\n');
    s
}

pub fn parse_graph_json(s: &str) -> Result<Graph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(s)?;
    Ok(Graph::new(doc.n, &doc.edges)?)
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Json => write_graph_json(g),
    }
}

pub fn parse_graph(s: &str, format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(s),
        GraphFormat::Json => parse_graph_json(s),
    }
}

#[derive(Serialize, Deserialize)]
struct CardDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    cert: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<GraphDoc>,
}

#[derive(Serialize, Deserialize)]
struct DeckDoc {
    n: usize,
    m: usize,
    cards: Vec<CardDoc>,
}

/// How a deck is written out.
#[derive(Debug, Clone, Copy, Default)]
pub struct DeckWriteOptions {
    /// Embed each card's edge list next to its certificate.
    pub debug_cards: bool,
    /// Collapse repeated cards into one entry with a count.
    pub set_mode: bool,
}

/// Deck document {"n", "m", "cards": [...]}, cards sorted by certificate.
/// `m` is always the true card count, also under set mode.
pub fn write_deck_json(d: &Deck, opts: DeckWriteOptions) -> String {
    let mut cards: Vec<CardDoc> = Vec::new();
    let mut i = 0;
    let all = d.cards();
    while i < all.len() {
        let cert = all[i].cert();
        let run = all[i..].iter().take_while(|c| c.cert() == cert).count();
        let graph = if opts.debug_cards {
            let g = materialize(cert).expect("deck certificates materialize");
            Some(GraphDoc { n: g.n(), edges: g.edges().to_vec() })
        } else {
            None
        };
        if opts.set_mode {
            cards.push(CardDoc { cert: Some(cert.to_hex()), count: Some(run), graph });
        } else {
            for _ in 0..run {
                cards.push(CardDoc {
                    cert: Some(cert.to_hex()),
                    count: None,
                    graph: graph.clone(),
                });
            }
        }
        i += run;
    }
    let doc = DeckDoc { n: d.n(), m: d.m(), cards };
    let mut s = serde_json::to_string_pretty(&doc).expect("deck doc serializes");
    s.push('\n');
    s
}

/// Reads both plain and set-mode documents; cards may carry a certificate,
/// an embedded edge list, or both (they must agree).
pub fn parse_deck_json(s: &str) -> Result<Deck, FormatError> {
    let doc: DeckDoc = serde_json::from_str(s)?;
    let mut certs: Vec<Certificate> = Vec::with_capacity(doc.m);
    for card in &doc.cards {
        let cert = match (&card.cert, &card.graph) {
            (Some(hexstr), maybe_graph) => {
                let cert = Certificate::from_hex(hexstr)?;
                if let Some(gd) = maybe_graph {
                    let g = Graph::new(gd.n, &gd.edges)?;
                    if graph_certificate(&g)? != cert {
                        return Err(FormatError::Invalid(
                            "card certificate does not match its embedded edge list".into(),
                        ));
                    }
                }
                cert
            }
            (None, Some(gd)) => graph_certificate(&Graph::new(gd.n, &gd.edges)?)?,
            (None, None) => {
                return Err(FormatError::Invalid(
                    "card carries neither a certificate nor an edge list".into(),
                ))
            }
        };
        for _ in 0..card.count.unwrap_or(1) {
            certs.push(cert.clone());
        }
    }
    if certs.len() != doc.m {
        return Err(FormatError::Invalid(format!(
            "document claims m = {} but lists {} cards",
            doc.m,
            certs.len()
        )));
    }
    Ok(Deck::from_certificates(doc.n, certs)?)
}

/// Reads a whole file, with "-" meaning standard input.
pub fn read_input(path: &str) -> Result<String, FormatError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

/// Writes a file atomically (temp file in the same directory, then rename);
/// "-" writes to standard output.
pub fn write_output(path: &str, contents: &str) -> Result<(), FormatError> {
    if path == "-" {
        use std::io::Write;
        std::io::stdout().write_all(contents.as_bytes())?;
        return Ok(());
    }
    let target = Path::new(path);
    let dir = target.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        use std::io::Write;
        tmp.write_all(contents.as_bytes())?;
    }
    tmp.persist(target).map_err(|e| FormatError::Io(e.error))?;
    Ok(())
}
