//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//!
//! Blank lines are ignored.

use super::CorpusError;
use crate::graph::{Graph, VertexId};

fn line_err(line: usize, message: impl Into<String>) -> CorpusError {
    CorpusError::EdgeList {
        line,
        message: message.into(),
    }
}

fn two_numbers<T: std::str::FromStr>(line: usize, text: &str) -> Result<(T, T), CorpusError> {
    let mut fields = text.split_whitespace();
    let mut next = || {
        fields
            .next()
            .ok_or_else(|| line_err(line, "expected two integers"))?
            .parse::<T>()
            .map_err(|_| line_err(line, format!("not an integer pair: {text:?}")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(line_err(line, format!("trailing fields: {text:?}")));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, CorpusError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| line_err(1, "missing header"))?;
    let (n, m): (usize, usize) = two_numbers(header_line, header)?;
    let edges = lines
        .map(|(no, l)| two_numbers::<VertexId>(no, l))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(line_err(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes `g` with vertices renumbered `0..n` in ascending id order.
pub fn emit_edge_list(g: &Graph) -> String {
    let ids: Vec<VertexId> = g.vertices().collect();
    let index = |v: VertexId| ids.binary_search(&v).expect("vertex");
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", index(a), index(b)));
    }
    out
}
