//! Plain-text edge-list files.
//!
//! Format: the first non-comment line is the vertex count `N`; every
//! subsequent non-comment line is `u v` with 0-based vertex indices. Lines
//! starting with `#` are comments; blank lines are ignored; the trailing
//! newline is optional. Serialization emits the canonical edge order, so
//! `parse(serialize(g)) == g`.

use std::fmt;

use hexlap_core::{Error as CoreError, Graph};

#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    /// No vertex-count line found.
    Empty,
    /// A line that is neither a count, an edge, a comment nor blank.
    MalformedLine { line: usize, content: String },
    /// Structurally invalid graph (bad index, loop, duplicate).
    Graph(CoreError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "no vertex-count line found"),
            ParseError::MalformedLine { line, content } => {
                write!(f, "malformed line {line}: {content:?}")
            }
            ParseError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<CoreError> for ParseError {
    fn from(e: CoreError) -> Self {
        ParseError::Graph(e)
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut num_vertices: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::MalformedLine { line: idx + 1, content: raw.to_string() };
        let mut tokens = line.split_whitespace();
        match num_vertices {
            None => {
                let n = tokens.next().ok_or_else(malformed)?;
                if tokens.next().is_some() {
                    return Err(malformed());
                }
                num_vertices = Some(n.parse().map_err(|_| malformed())?);
            }
            Some(_) => {
                let u: usize = tokens.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
                let v: usize = tokens.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
                if tokens.next().is_some() {
                    return Err(malformed());
                }
                edges.push((u, v));
            }
        }
    }
    let n = num_vertices.ok_or(ParseError::Empty)?;
    Ok(Graph::new(n, edges)?)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&g.num_vertices().to_string());
    out.push('\n');
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
