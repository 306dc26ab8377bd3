//! graph6 encoding of undirected simple graphs.
//!
//! Vertices are numbered by ascending id. The size header is one byte for
//! `n < 63`, `~` plus three bytes for `n < 258048`, and `~~` plus six bytes
//! beyond that. The upper triangle follows column by column, six bits per
//! byte, each byte offset by 63. Only minimal headers and zero padding are
//! accepted, so parsing and emitting are mutually inverse.

use super::CorpusError;
use crate::graph::{Graph, VertexId};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> CorpusError {
    CorpusError::Graph6(msg.into())
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    let digits = if n < 63 {
        1
    } else if n < 258_048 {
        out.push(b'~');
        3
    } else {
        out.extend_from_slice(b"~~");
        6
    };
    for k in (0..digits).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + OFFSET);
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(ids[i], ids[j]) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize), CorpusError> {
    let value = |digits: &[u8]| {
        digits
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize)
    };
    match bytes {
        [] => Err(err("empty input")),
        [b'~', b'~', rest @ ..] => {
            let digits = rest.get(..6).ok_or_else(|| err("truncated size header"))?;
            let n = value(digits);
            if n < 258_048 {
                return Err(err("non-minimal size header"));
            }
            Ok((n, 8))
        }
        [b'~', rest @ ..] => {
            let digits = rest.get(..3).ok_or_else(|| err("truncated size header"))?;
            let n = value(digits);
            if n < 63 {
                return Err(err("non-minimal size header"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - OFFSET) as usize, 1)),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, CorpusError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(err(format!(
            "byte {:#04x} at position {pos} is outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, header_len) = read_size(bytes)?;
    let body = &bytes[header_len..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n as VertexId {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}
