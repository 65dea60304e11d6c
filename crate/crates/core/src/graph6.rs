//! graph6 encoding (short form, orders up to 62).
//!
//! A line is one byte `n + 63` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits
//! per byte big-end first, zero padded, each byte offset by 63.

use crate::graph::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("order above {MAX_ORDER} is not supported (offset {offset})")]
    UnsupportedOrder { offset: usize },
    #[error("expected {expected} bytes for order {order}, found {found} (offset {offset})")]
    BadLength { order: usize, expected: usize, found: usize, offset: usize },
    #[error("nonzero padding bits in the final byte (offset {offset})")]
    NonzeroPadding { offset: usize },
}

impl Graph6Error {
    /// Byte offset the error refers to, when there is one.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            Graph6Error::Empty => None,
            Graph6Error::BadByte { offset, .. }
            | Graph6Error::UnsupportedOrder { offset }
            | Graph6Error::BadLength { offset, .. }
            | Graph6Error::NonzeroPadding { offset } => Some(offset),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 short form supports at most {MAX_ORDER} vertices, got {0}")]
pub struct UnsupportedOrder(pub usize);

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. Surrounding whitespace (such as the newline) is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&first, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::UnsupportedOrder { offset: 0 });
    }
    let n = (first - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            order: n,
            expected: expected + 1,
            found: bytes.len(),
            offset: 1 + expected.min(body.len()),
        });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: bytes.len() - 1 });
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line (no trailing newline). Labeled, not canonical.
pub fn emit_graph6(g: &Graph) -> Result<String, UnsupportedOrder> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

impl Graph {
    /// Shorthand for [`emit_graph6`]; infallible because orders never exceed 62.
    pub fn to_graph6(&self) -> String {
        emit_graph6(self).expect("Graph order is capped at MAX_ORDER")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn hand_decoded_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(complete(2).to_graph6(), "A_");
        assert_eq!(Graph::empty(0).to_graph6(), "?");
        // petgraph's test graph: edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
    }

    #[test]
    fn known_lines() {
        assert_eq!(cycle(5).to_graph6(), "Dhc");
        assert_eq!(complete(4).to_graph6(), "C~");
        assert_eq!(path(3).to_graph6(), "Bg");
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        let e = parse_graph6("A 1").unwrap_err();
        assert!(matches!(e, Graph6Error::BadByte { .. }));
        let e = parse_graph6("A\u{7f}").unwrap_err();
        assert_eq!(e, Graph6Error::BadByte { offset: 1, byte: 0x7f });
        assert_eq!(e.offset(), Some(1));
        assert!(matches!(parse_graph6("A"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(parse_graph6("A__"), Err(Graph6Error::BadLength { offset: 2, .. })));
        // order 2 has one data bit; the remaining five must be zero
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert_eq!(parse_graph6("~??~"), Err(Graph6Error::UnsupportedOrder { offset: 0 }));
    }

    #[test]
    fn message_mentions_offset() {
        let msg = parse_graph6("Dh c").unwrap_err().to_string();
        assert!(msg.contains("offset 2"), "{msg}");
    }
}
