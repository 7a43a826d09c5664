//! graph6 encoding for graphs with at most 62 vertices.
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix
//! is read column by column (`(0,1), (0,2), (1,2), (0,3), …`), cut into
//! groups of six bits, most significant bit first, zero-padded, and each
//! group is written as `63 + value`.

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return invalid(format!(
            "graph6 short form holds at most {MAX_GRAPH6_ORDER} vertices, got {n}"
        ));
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

fn parse_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

pub fn decode_graph6(code: &str) -> Result<Graph> {
    let bytes = code.as_bytes();
    let Some(&head) = bytes.first() else {
        return parse_err(0, "empty graph6 string");
    };
    if !(63..=126).contains(&head) {
        return parse_err(0, format!("byte {head:#04x} is outside the graph6 range"));
    }
    if head == 126 {
        return parse_err(0, "graphs with more than 62 vertices are not supported");
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        let offset = bytes.len().min(expected);
        return parse_err(
            offset,
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        );
    }
    for (offset, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return parse_err(offset, format!("byte {b:#04x} is outside the graph6 range"));
        }
    }
    let bit_at = |k: usize| -> bool { (bytes[1 + k / 6] - 63) >> (5 - k % 6) & 1 == 1 };
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    let padded = (expected - 1) * 6;
    if (bits..padded).any(bit_at) {
        return parse_err(expected - 1, "non-zero padding bits");
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pineapple;

    #[test]
    fn known_codes() {
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        // same example as networkx / petgraph: edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn round_trip() {
        let g = pineapple(5, 3).unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn malformed_codes() {
        let offset = |s: &str| match decode_graph6(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset(" "), 0);
        assert_eq!(offset("C"), 1);
        assert_eq!(offset("A__"), 2);
        assert_eq!(offset("C "), 1);
        assert_eq!(offset("A`"), 1);
        assert!(decode_graph6("~").is_err());
        assert!(encode_graph6(&Graph::empty(63).unwrap()).is_err());
    }
}
