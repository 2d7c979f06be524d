//! Graph serialization: a line-oriented edge-list format for humans, graph6
//! for interchange with external graph tools, a DOT edge dump, and the bundled
//! 24-vertex cubic fixture graph.

use crate::graph::{Graph, MAX_VERTICES};

/// Edge-list / graph6 parse failure, with a 1-based line number where that
/// makes sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Canonical edge-list document: a header line `n=<count>`, then one `i j`
/// line per edge with i < j, sorted lexicographically. `#` starts a comment.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Parses an edge-list document. Records may be separated by newlines or
/// semicolons; blank records and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<Graph> = None;
    for (lineno, raw_line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        // a comment runs to the end of the line, not just to the next record
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        for record in line.split(';') {
            let record = record.trim();
            if record.is_empty() {
                continue;
            }
            match &mut g {
                None => {
                    let n_str = record
                        .strip_prefix("n=")
                        .ok_or_else(|| ParseError::new(lineno, "expected header `n=<count>`"))?;
                    let n: usize = n_str.trim().parse().map_err(|_| {
                        ParseError::new(lineno, format!("bad vertex count {n_str:?}"))
                    })?;
                    if n > MAX_VERTICES {
                        return Err(ParseError::new(
                            lineno,
                            format!("vertex count {n} exceeds capacity {MAX_VERTICES}"),
                        ));
                    }
                    g = Some(Graph::with_vertices(n));
                }
                Some(g) => {
                    let mut it = record.split_whitespace();
                    let (i, j) = match (it.next(), it.next(), it.next()) {
                        (Some(a), Some(b), None) => (a, b),
                        _ => {
                            return Err(ParseError::new(
                                lineno,
                                format!("expected edge `i j`, got {record:?}"),
                            ))
                        }
                    };
                    let parse_vertex = |s: &str| -> Result<usize, ParseError> {
                        s.parse()
                            .map_err(|_| ParseError::new(lineno, format!("bad vertex index {s:?}")))
                    };
                    let (i, j) = (parse_vertex(i)?, parse_vertex(j)?);
                    if i >= g.n() || j >= g.n() {
                        return Err(ParseError::new(
                            lineno,
                            format!("vertex index out of range in edge {i} {j} (n={})", g.n()),
                        ));
                    }
                    if i == j {
                        return Err(ParseError::new(lineno, format!("self-loop at vertex {i}")));
                    }
                    if g.has_edge(i, j) {
                        return Err(ParseError::new(lineno, format!("duplicate edge {i} {j}")));
                    }
                    g.add_edge(i, j);
                }
            }
        }
    }
    g.ok_or_else(|| ParseError::new(1, "empty document, expected header `n=<count>`"))
}

/// Encodes a graph in graph6 (short form, n ≤ 62): one byte n+63, then the
/// upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2),
/// x(0,3), …, packed six per byte MSB-first, each six-bit group offset by 63.
pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > 62 {
        return Err(ParseError::new(
            1,
            format!("graph6 short form supports at most 62 vertices, got {n}"),
        ));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

/// Decodes a short-form graph6 string (optionally ending in a newline).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::new(1, "empty graph6 string"));
    }
    let header = bytes[0];
    if header == 126 {
        return Err(ParseError::new(
            1,
            "multi-byte graph6 vertex counts (n > 62) are not supported",
        ));
    }
    if !(63..=125).contains(&header) {
        return Err(ParseError::new(
            1,
            format!("invalid graph6 header byte {header}"),
        ));
    }
    let n = (header - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    let expected_bytes = bit_count.div_ceil(6);
    if body.len() != expected_bytes {
        return Err(ParseError::new(
            1,
            format!(
                "graph6 body has {} bytes, expected {expected_bytes} for n={n}",
                body.len()
            ),
        ));
    }
    let mut g = Graph::with_vertices(n);
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(ParseError::new(
                    1,
                    format!("invalid graph6 body byte {byte}"),
                ));
            }
            let group = byte - 63;
            let bit = (group >> (5 - (bit_index % 6))) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'outer;
            }
        }
    }
    Ok(g)
}

/// DOT edge dump (no coordinates), for quick visual inspection with graphviz.
pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (i, j) in g.edges() {
        out.push_str(&format!("  {i} -- {j};\n"));
    }
    out.push_str("}\n");
    out
}

/// The bundled 24-vertex cubic planar graph with no 4-cycle and no 8-cycle but
/// a 16-cycle, transcribed from the published drawing and stored as data.
/// Construction re-checks the structural invariants; the cycle spectrum and
/// induced-path properties are validated by the test suite.
pub fn markstrom_fixture() -> Graph {
    let text = include_str!("../data/markstrom.txt");
    let g = parse_edge_list(text).expect("bundled fixture must parse");
    assert_eq!(g.n(), 24, "fixture must have 24 vertices");
    assert_eq!(g.edge_count(), 36, "fixture must have 36 edges");
    assert!(
        (0..g.n()).all(|v| g.degree(v) == 3),
        "fixture must be cubic"
    );
    g
}
