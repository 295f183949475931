//! Graph input formats: graph6 and a plain edge list.
//!
//! graph6 follows the nauty encoding: a size header followed by the upper
//! triangle of the adjacency matrix, column by column, six bits per byte with
//! 63 added. Only the short and `~`-prefixed headers are recognized; anything
//! above the active vertex limit is rejected with its vertex count.

use std::path::Path;
use std::str::FromStr;

use fracbox_core::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("graph has {n} vertices, limit is {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("line {line}: missing vertex count")]
    MissingVertexCount { line: usize },
    #[error("line {line}: `{token}` is not a vertex index")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: expected two vertices")]
    MalformedLine { line: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
}

impl ParseError {
    pub fn is_size_limit(&self) -> bool {
        matches!(self, ParseError::TooManyVertices { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    /// `.g6` means graph6, everything else an edge list.
    pub fn detect(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("g6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }

    pub fn parse(self, text: &str, max_n: usize) -> Result<Graph, ParseError> {
        match self {
            Format::Graph6 => parse_graph6(text, max_n),
            Format::EdgeList => parse_edge_list(text, max_n),
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" => Ok(Format::EdgeList),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

const HEADER: &str = ">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str, max_n: usize) -> Result<Graph, ParseError> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::InvalidByte { offset, byte });
        }
    }
    let (n, body) = match bytes {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(ParseError::MalformedHeader);
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(ParseError::MalformedHeader);
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
        [] => unreachable!(),
    };
    let limit = max_n.min(fracbox_core::graph::CAPACITY);
    if n > limit {
        return Err(ParseError::TooManyVertices { n, limit });
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(ParseError::LengthMismatch {
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::empty(n).expect("checked against capacity");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("in range");
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - 63) & pad_mask != 0 {
            return Err(ParseError::NonzeroPadding);
        }
    }
    Ok(g)
}

fn decode_size(chunk: &[u8]) -> usize {
    chunk
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
}

/// Encodes `g` in graph6 without a trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses `n` on the first line, then one `u v` pair per line. Blank lines are
/// skipped and repeated edges collapse.
pub fn parse_edge_list(text: &str, max_n: usize) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines
        .next()
        .ok_or(ParseError::MissingVertexCount { line: 1 })?;
    let n: usize = header.parse().map_err(|_| ParseError::InvalidToken {
        line: first,
        token: header.to_string(),
    })?;
    let limit = max_n.min(fracbox_core::graph::CAPACITY);
    if n > limit {
        return Err(ParseError::TooManyVertices { n, limit });
    }
    let mut g = Graph::empty(n).expect("checked against capacity");
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(ParseError::MalformedLine { line });
        };
        let vertex = |t: &str| -> Result<usize, ParseError> {
            let v: usize = t.parse().map_err(|_| ParseError::InvalidToken {
                line,
                token: t.to_string(),
            })?;
            if v >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: v, n });
            }
            Ok(v)
        };
        let (u, v) = (vertex(a)?, vertex(b)?);
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        g.add_edge(u, v).expect("validated");
    }
    Ok(g)
}

/// Edge-list text for `g`: vertex count, then edges in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_and_empty_graphs() {
        let g = parse_graph6("@", 12).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(parse_graph6("?", 12).unwrap().n(), 0);
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn header_prefix_and_whitespace() {
        let g = parse_graph6(">>graph6<<Bw\n", 12).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(emit_graph6(&g), "Bw");
    }

    #[test]
    fn graph6_errors_are_distinct() {
        assert_eq!(parse_graph6("", 12), Err(ParseError::Empty));
        assert_eq!(
            parse_graph6("D?{x", 12),
            Err(ParseError::LengthMismatch {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            parse_graph6("D\u{7f}{", 12),
            Err(ParseError::InvalidByte {
                offset: 1,
                byte: 0x7f
            })
        );
        // 13 vertices
        assert_eq!(
            parse_graph6("L???????????????", 12),
            Err(ParseError::TooManyVertices { n: 13, limit: 12 })
        );
        assert_eq!(parse_graph6("~?", 12), Err(ParseError::MalformedHeader));
        // K2 is a single bit followed by five zero padding bits.
        assert!(parse_graph6("A_", 12).is_ok());
        assert_eq!(parse_graph6("A`", 12), Err(ParseError::NonzeroPadding));
    }

    #[test]
    fn long_header_reports_size() {
        assert_eq!(
            parse_graph6("~??~", 12),
            Err(ParseError::TooManyVertices { n: 63, limit: 12 })
        );
    }

    #[test]
    fn edge_list_examples() {
        let c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0", 12).unwrap();
        assert_eq!(c4, Graph::cycle(4).unwrap());
        assert_eq!(c4.edge_count(), 4);
        let single = parse_edge_list("3\n0 1\n0 1", 12).unwrap();
        assert_eq!(single.edge_count(), 1);
        assert_eq!(
            parse_edge_list("2\n0 0", 12),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("2\n0 2", 12),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 2,
                n: 2
            })
        );
        assert!(matches!(
            parse_edge_list("2\n0 x", 12),
            Err(ParseError::InvalidToken { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("3\n0 1 2", 12),
            Err(ParseError::MalformedLine { line: 2 })
        );
        assert_eq!(
            parse_edge_list("", 12),
            Err(ParseError::MissingVertexCount { line: 1 })
        );
        assert!(parse_edge_list("13\n", 12).unwrap_err().is_size_limit());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::complete_multipartite(&[3, 2]).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&g), 12).unwrap(), g);
    }

    #[test]
    fn format_detection() {
        assert_eq!(Format::detect(Path::new("a/b.g6")), Format::Graph6);
        assert_eq!(Format::detect(Path::new("graph.txt")), Format::EdgeList);
        assert_eq!("edgelist".parse::<Format>(), Ok(Format::EdgeList));
        assert!("sparse6".parse::<Format>().is_err());
    }
}
