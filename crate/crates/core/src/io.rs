//! graph6 and edge-list readers and writers, and the JSON report schema.
//!
//! The edge-list format is a header line `n m` followed by `m` lines
//! `u v` with 0-based endpoints. Blocks may be concatenated. Blank lines and
//! lines starting with `#` are ignored.

use std::io::BufRead;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::audit::AuditFinding;
use crate::coloring::{Coloring, DecompositionTrace};
use crate::cycles::{Hole, MembershipVerdict};
use crate::graph::{CutCertificate, Graph, GraphError};
use crate::jumps::JumpRecord;
use crate::theta::{EarLemmaCheck, ThetaSubgraph};

pub const SCHEMA_VERSION: &str = "1";
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated size prefix")]
    BadSizePrefix { offset: usize },
    #[error("byte {offset}: expected {expected} data bytes, found {found}")]
    Length {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: padding bits are not zero")]
    Padding { offset: usize },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let body = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match body.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::BadByte {
            offset: skip + i,
            byte: bytes[i],
        });
    }
    let six = |b: u8| (b - 63) as u64;
    let (n, start) = if bytes[0] != 126 {
        (six(bytes[0]), 1)
    } else {
        let (width, start) = if bytes.get(1) == Some(&126) { (6, 2) } else { (3, 1) };
        let digits = bytes.get(start..start + width).ok_or(ParseError::BadSizePrefix {
            offset: skip + bytes.len(),
        })?;
        (digits.iter().fold(0u64, |acc, &b| (acc << 6) | six(b)), start + width)
    };
    let data = &bytes[start..];
    let bits = n as u128 * n.saturating_sub(1) as u128 / 2;
    let expected = bits.div_ceil(6);
    if expected != data.len() as u128 {
        return Err(ParseError::Length {
            offset: skip + start,
            expected: usize::try_from(expected).unwrap_or(usize::MAX),
            found: data.len(),
        });
    }
    let n = n as usize;
    let bits = bits as usize;
    let pad = data.len() * 6 - bits;
    if pad > 0 && six(data[data.len() - 1]) & ((1 << pad) - 1) != 0 {
        return Err(ParseError::Padding {
            offset: skip + bytes.len() - 1,
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (six(data[k / 6]) >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|source| ParseError::Graph { line: 1, source })
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("ascii")
}

/// Parses exactly one edge-list block.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = numbered_lines(text);
    let built = read_edge_block(&mut lines)?.ok_or(ParseError::EdgeList {
        line: 1,
        message: "missing header".into(),
    })?;
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::EdgeList {
            line,
            message: "more edge lines than the header declares".into(),
        });
    }
    Ok(built.0)
}

/// Parses every block of a concatenated edge-list text. The flag is set
/// when a block repeated an edge.
pub fn parse_edge_lists(text: &str) -> Result<Vec<(Graph, bool)>, ParseError> {
    let mut lines = numbered_lines(text);
    let mut out = Vec::new();
    while let Some(b) = read_edge_block(&mut lines)? {
        out.push(b);
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let bad = || ParseError::EdgeList {
        line,
        message: format!("expected two non-negative integers, got {text:?}"),
    };
    let mut it = text.split_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

fn read_edge_block<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Option<(Graph, bool)>, ParseError> {
    let Some((header_line, header)) = lines.next() else {
        return Ok(None);
    };
    let (n, m) = two_numbers(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = header_line;
    for _ in 0..m {
        let (line, text) = lines.next().ok_or(ParseError::EdgeList {
            line: last,
            message: format!("header declares {m} edges, found {}", edges.len()),
        })?;
        last = line;
        let (u, v) = two_numbers(line, text)?;
        if u == v {
            return Err(ParseError::Graph {
                line,
                source: GraphError::SelfLoop(u),
            });
        }
        if u >= n || v >= n {
            return Err(ParseError::Graph {
                line,
                source: GraphError::OutOfRange(u, v, n),
            });
        }
        edges.push((u, v));
    }
    let built = Graph::build(n, &edges).map_err(|source| ParseError::Graph {
        line: header_line,
        source,
    })?;
    Ok(Some((built.graph, built.duplicate_edges > 0)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Graph6,
    EdgeList,
    /// Edge list when the first content line is two integers, graph6
    /// otherwise. graph6 never uses digits or spaces.
    Auto,
}

#[derive(Debug, Clone)]
pub struct StreamItem {
    /// `source:index`, index counted from 0 in stream order.
    pub id: String,
    pub line: usize,
    pub graph: Graph,
    pub duplicate_edges: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source_name} line {line}: {error}")]
pub struct StreamError {
    pub source_name: String,
    pub id: String,
    pub line: usize,
    pub error: ParseError,
}

/// Graphs read one at a time from a reader. A graph6 line that fails to
/// parse yields an error and the stream moves on; an edge-list error ends
/// the stream because block boundaries can no longer be trusted.
pub struct GraphStream<R> {
    reader: R,
    source: String,
    format: Format,
    line_no: usize,
    index: usize,
    pushed_back: Option<String>,
    done: bool,
}

impl<R: BufRead> GraphStream<R> {
    pub fn new(source: impl Into<String>, reader: R, format: Format) -> Self {
        GraphStream {
            reader,
            source: source.into(),
            format,
            line_no: 0,
            index: 0,
            pushed_back: None,
            done: false,
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    fn next_line(&mut self) -> Option<(usize, String)> {
        if let Some(l) = self.pushed_back.take() {
            return Some((self.line_no, l));
        }
        loop {
            let mut buf = String::new();
            match self.reader.read_line(&mut buf) {
                Ok(0) | Err(_) => return None,
                Ok(_) => {
                    self.line_no += 1;
                    let t = buf.trim();
                    if !t.is_empty() && !t.starts_with('#') {
                        return Some((self.line_no, t.to_string()));
                    }
                }
            }
        }
    }

    fn resolve_format(&mut self) -> Option<()> {
        if self.format == Format::Auto {
            let (_, line) = self.next_line()?;
            let edge = line.split_whitespace().count() == 2 && line.split_whitespace().all(|t| t.parse::<usize>().is_ok());
            self.format = if edge { Format::EdgeList } else { Format::Graph6 };
            self.pushed_back = Some(line);
        }
        Some(())
    }

    fn error(&mut self, line: usize, error: ParseError) -> StreamError {
        let id = format!("{}:{}", self.source, self.index);
        self.index += 1;
        StreamError {
            source_name: self.source.clone(),
            id,
            line,
            error,
        }
    }
}

impl<R: BufRead> Iterator for GraphStream<R> {
    type Item = Result<StreamItem, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        self.resolve_format()?;
        let (line, text) = self.next_line()?;
        let parsed = match self.format {
            Format::Graph6 => parse_graph6(&text).map(|g| (g, false)),
            _ => {
                let m = match two_numbers(line, &text) {
                    Ok((_, m)) => m,
                    Err(e) => {
                        self.done = true;
                        return Some(Err(self.error(line, e)));
                    }
                };
                let mut block = vec![(line, text)];
                block.extend((0..m).map_while(|_| self.next_line()));
                read_edge_block(&mut block.iter().map(|(l, t)| (*l, t.as_str())))
                    .map(|b| b.expect("block has a header"))
            }
        };
        Some(match parsed {
            Ok((graph, duplicate_edges)) => {
                let id = format!("{}:{}", self.source, self.index);
                self.index += 1;
                Ok(StreamItem {
                    id,
                    line,
                    graph,
                    duplicate_edges,
                })
            }
            Err(e) => {
                if self.format == Format::EdgeList {
                    self.done = true;
                }
                Err(self.error(line, e))
            }
        })
    }
}

/// Opens a path, or standard input for `-`.
pub fn open_stream(path: &str, format: Format) -> std::io::Result<GraphStream<Box<dyn BufRead>>> {
    let reader: Box<dyn BufRead> = if path == "-" {
        Box::new(std::io::BufReader::new(std::io::stdin()))
    } else {
        Box::new(std::io::BufReader::new(std::fs::File::open(path)?))
    };
    let name = if path == "-" { "stdin" } else { path };
    Ok(GraphStream::new(name, reader, format))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringSummary {
    pub colors_used: usize,
    pub proper: bool,
    /// Set when some leaf needed more than three colours.
    pub excess: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chromatic: Option<usize>,
    pub stuck_without_cut: bool,
    pub pieces_left_class: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Coloring>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<DecompositionTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleJumps {
    pub hole: Hole,
    pub jumps: Vec<JumpRecord>,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaRecord {
    pub theta: ThetaSubgraph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ear_lemma: Option<EarLemmaCheck>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub id: String,
    pub n: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub duplicate_edges: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub membership: Option<MembershipVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<CutCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holes: Option<Vec<Hole>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jumps: Option<Vec<HoleJumps>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thetas: Option<Vec<ThetaRecord>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<AuditFinding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl GraphRecord {
    pub fn new(id: impl Into<String>, g: &Graph) -> GraphRecord {
        GraphRecord {
            id: id.into(),
            n: g.n(),
            m: g.m(),
            ..GraphRecord::default()
        }
    }

    pub fn parse_failure(e: &StreamError) -> GraphRecord {
        GraphRecord {
            id: e.id.clone(),
            error: Some(format!("line {}: {}", e.line, e.error)),
            ..GraphRecord::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub graphs: Vec<GraphRecord>,
}

impl Default for Report {
    fn default() -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            graphs: Vec::new(),
        }
    }
}

pub fn emit_report(report: &Report, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(report)
    } else {
        serde_json::to_string(report)
    }
    .expect("report serialises")
}

#[derive(Serialize)]
struct Line<'a> {
    schema_version: std::borrow::Cow<'a, str>,
    #[serde(flatten)]
    record: std::borrow::Cow<'a, GraphRecord>,
}

/// One JSON Lines entry: a record tagged with the schema version, no
/// trailing newline.
pub fn emit_record_line(record: &GraphRecord) -> String {
    serde_json::to_string(&Line {
        schema_version: SCHEMA_VERSION.into(),
        record: std::borrow::Cow::Borrowed(record),
    })
    .expect("record serialises")
}

pub fn parse_record_line(line: &str) -> Result<GraphRecord, serde_json::Error> {
    // flatten buffers the fields and then rejects the string keys of the
    // colouring map, so strip the version by hand instead
    let mut value: serde_json::Value = serde_json::from_str(line)?;
    if let Some(obj) = value.as_object_mut() {
        obj.remove("schema_version");
    }
    serde_json::from_value(value)
}

pub fn parse_report(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}
