//! Text encodings for graphs: the edge-list format, graph6, and a labeled
//! edge list with arbitrary vertex names.
//!
//! Edge list: the first line is the vertex count, each further line is a
//! pair `u v` of 0-based ids. Blank lines are ignored and `#` starts a
//! comment. Graph6 follows McKay's specification, with the optional
//! `>>graph6<<` header.

use std::collections::HashMap;
use std::fmt;

use treelike_core::{Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    /// Edge list when the first content line is a number, graph6 otherwise.
    Auto,
    EdgeList,
    Graph6,
    /// Edge list without a header whose vertex names are arbitrary tokens.
    Labeled,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Auto => "auto",
            Format::EdgeList => "edge-list",
            Format::Graph6 => "graph6",
            Format::Labeled => "labeled",
        }
    }
}

/// Where the input went wrong: a 1-based line for the line formats, a
/// 0-based byte offset for graph6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Line(usize),
    Byte(usize),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Line(l) => write!(f, "line {l}"),
            Position::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{at}: {message}")]
    Syntax { at: Position, message: String },
    #[error("{at}: {source}")]
    Invalid {
        at: Position,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub fn position(&self) -> Position {
        match self {
            ParseError::Syntax { at, .. } | ParseError::Invalid { at, .. } => *at,
        }
    }

    fn syntax(at: Position, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            at,
            message: message.into(),
        }
    }
}

/// Lines with comments stripped, paired with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn detect(text: &str) -> Format {
    match content_lines(text).next() {
        Some((_, l)) if l.parse::<usize>().is_ok() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph, ParseError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| ParseError::syntax(Position::Byte(e.valid_up_to()), "input is not UTF-8"))?;
    match format {
        Format::Auto => parse_graph(bytes, detect(text)),
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
        Format::Labeled => parse_labeled_edge_list(text).map(|(g, _)| g),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| ParseError::syntax(Position::Line(1), "missing vertex count"))?;
    let n: usize = header.parse().map_err(|_| {
        ParseError::syntax(
            Position::Line(first),
            format!("expected a vertex count, found {header:?}"),
        )
    })?;
    let mut edges = Vec::new();
    let mut at = Vec::new();
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        let mut id = || -> Result<usize, ParseError> {
            let tok = parts
                .next()
                .ok_or_else(|| ParseError::syntax(Position::Line(no), "expected two vertex ids"))?;
            tok.parse().map_err(|_| {
                ParseError::syntax(Position::Line(no), format!("bad vertex id {tok:?}"))
            })
        };
        let (u, v) = (id()?, id()?);
        if parts.next().is_some() {
            return Err(ParseError::syntax(
                Position::Line(no),
                "trailing tokens after the edge",
            ));
        }
        edges.push((u, v));
        at.push(no);
    }
    build(n, &edges, &at)
}

/// Builds the graph, reporting a validation error at the line of the first
/// offending edge.
fn build(n: usize, edges: &[(usize, usize)], lines: &[usize]) -> Result<Graph, ParseError> {
    let mut seen = std::collections::HashSet::new();
    for (&(u, v), &line) in edges.iter().zip(lines) {
        let problem = if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
            Some(GraphError::VertexOutOfRange { vertex, n })
        } else if u == v {
            Some(GraphError::SelfLoop { vertex: u })
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            })
        } else {
            None
        };
        if let Some(source) = problem {
            return Err(ParseError::Invalid {
                at: Position::Line(line),
                source,
            });
        }
    }
    Graph::from_edges(n, edges.iter().copied()).map_err(|source| ParseError::Invalid {
        at: Position::Line(1),
        source,
    })
}

/// Parses an edge list whose vertices are arbitrary whitespace-free names.
/// A line with one name declares an isolated vertex. Names get dense ids
/// in order of first appearance; the returned vector maps ids back to names.
pub fn parse_labeled_edge_list(text: &str) -> Result<(Graph, Vec<String>), ParseError> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut at = Vec::new();
    for (no, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() > 2 {
            return Err(ParseError::syntax(
                Position::Line(no),
                "expected one or two vertex names",
            ));
        }
        let mut id = |t: &str| {
            *ids.entry(t.to_string()).or_insert_with(|| {
                labels.push(t.to_string());
                labels.len() - 1
            })
        };
        let u = id(toks[0]);
        if let Some(t) = toks.get(1) {
            let v = id(t);
            edges.push((u, v));
            at.push(no);
        }
    }
    Ok((build(labels.len(), &edges, &at)?, labels))
}

fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let start = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut offset = start;
    if let Some(rest) = body.strip_prefix(">>graph6<<") {
        body = rest;
        offset += ">>graph6<<".len();
    }
    let bytes = body.as_bytes();
    let bad = |i: usize, msg: &str| ParseError::syntax(Position::Byte(offset + i), msg);
    if let Some(i) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(bad(i, "byte outside the graph6 range 63..=126"));
    }
    let six = |i: usize| -> Result<usize, ParseError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| bad(i, "truncated vertex count"))
    };
    let (n, header) = match bytes.first() {
        None => return Err(bad(0, "empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | six(i)?;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &bytes[header..];
    if data.len() != need {
        return Err(bad(
            header + data.len().min(need),
            &format!(
                "expected {need} adjacency bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && (data[need - 1] - 63) & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(bad(header + need - 1, "nonzero padding bits"));
    }
    Graph::from_edges(n, edges).map_err(|source| ParseError::Invalid {
        at: Position::Byte(offset),
        source,
    })
}

/// Encodes `g`. Edge lists put every line, including the last, on its own
/// newline-terminated line; graph6 output has no trailing newline. Labeled
/// output names vertices by their decimal ids and declares all of them
/// first, so that reading it back keeps the ids.
pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Auto | Format::EdgeList => {
            let mut out = format!("{}\n", g.n());
            for e in g.edges() {
                out += &format!("{} {}\n", e.u, e.v);
            }
            out
        }
        Format::Graph6 => graph6(g),
        Format::Labeled => {
            let mut out = String::new();
            for v in 0..g.n() {
                out += &format!("{v}\n");
            }
            for e in g.edges() {
                out += &format!("{} {}\n", e.u, e.v);
            }
            out
        }
    }
}

fn graph6(g: &Graph) -> String {
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use treelike_core::graph::families::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_graph(b"3\n0 1\n1 2", Format::EdgeList).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(serialize_graph(&path(3), Format::EdgeList), "3\n0 1\n1 2\n");
        assert_eq!(serialize_graph(&Graph::empty(0), Format::EdgeList), "0\n");
        let e = parse_graph(b"2\n0 0", Format::EdgeList).unwrap_err();
        assert!(matches!(
            e,
            ParseError::Invalid {
                at: Position::Line(2),
                source: GraphError::SelfLoop { vertex: 0 }
            }
        ));
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_graph(b"# a path\n3 # three\n\n0 1\n# skip\n2 1\n", Format::Auto).unwrap();
        assert_eq!(g, path(3));
        let e = parse_graph(b"3\n0 1\n0 x\n", Format::EdgeList).unwrap_err();
        assert_eq!(e.position(), Position::Line(3));
        let e = parse_graph(b"3\n0 1\n1 2\n1 0\n", Format::EdgeList).unwrap_err();
        assert!(matches!(
            e,
            ParseError::Invalid {
                at: Position::Line(4),
                ..
            }
        ));
        let e = parse_graph(b"3\n0 5\n", Format::EdgeList).unwrap_err();
        assert!(matches!(
            e,
            ParseError::Invalid {
                at: Position::Line(2),
                ..
            }
        ));
        assert!(parse_graph(b"", Format::EdgeList).is_err());
        assert!(parse_graph(b"2\n0 1 1\n", Format::EdgeList).is_err());
    }

    #[test]
    fn graph6_examples() {
        // n = 4 gives 'C' (4 + 63); six adjacency bits all set give '~'.
        let k4 = parse_graph(b"C~", Format::Graph6).unwrap();
        assert_eq!(k4, complete(4));
        assert_eq!(serialize_graph(&complete(4), Format::Graph6), "C~");
        // P3: bits x01 x02 x12 = 1 0 1, padded to 101000 = 40, plus 63.
        assert_eq!(serialize_graph(&path(3), Format::Graph6), "Bg");
        assert_eq!(serialize_graph(&Graph::empty(0), Format::Graph6), "?");
        assert_eq!(
            parse_graph(b">>graph6<<C~\n", Format::Auto).unwrap(),
            complete(4)
        );
        assert_eq!(parse_graph(b"@", Format::Auto).unwrap(), Graph::empty(1));
    }

    #[test]
    fn graph6_errors() {
        let e = parse_graph(b"C~~", Format::Graph6).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { .. }));
        let e = parse_graph(b"C\x01", Format::Graph6).unwrap_err();
        assert_eq!(e.position(), Position::Byte(1));
        // Three bits for P3 leave three padding bits, which must be zero.
        assert!(parse_graph(b"Bh", Format::Graph6).is_err());
        assert!(parse_graph(b"~?", Format::Graph6).is_err());
    }

    #[test]
    fn large_graph6_header() {
        let g = path(70);
        let s = serialize_graph(&g, Format::Graph6);
        assert!(s.starts_with('~'));
        // 70 = 1 * 64 + 6 in three 6-bit groups.
        assert_eq!(&s.as_bytes()[1..4], &[63, 64, 69]);
        assert_eq!(parse_graph(s.as_bytes(), Format::Graph6).unwrap(), g);
    }

    #[test]
    fn labeled_lists() {
        let (g, labels) = parse_labeled_edge_list("alice bob\nbob carol\ndave\n# x\n").unwrap();
        assert_eq!(labels, ["alice", "bob", "carol", "dave"]);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
        let (h, _) = parse_labeled_edge_list(&serialize_graph(&g, Format::Labeled)).unwrap();
        assert_eq!(h, g);
        assert!(parse_labeled_edge_list("a a\n").is_err());
        assert!(parse_labeled_edge_list("a b c\n").is_err());
    }
}
