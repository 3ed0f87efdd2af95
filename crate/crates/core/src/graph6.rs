//! graph6 encoding, short form (`n <= 62`).
//!
//! The word is one byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const SHORT_FORM_LIMIT: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > SHORT_FORM_LIMIT {
        return Err(Error::Graph6TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Graph6Length { expected: 1, found: 0 });
    };
    if !(63..=63 + SHORT_FORM_LIMIT as u8).contains(&first) {
        return Err(Error::Graph6Byte { pos: 0, byte: first });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6Length { expected, found: bytes.len() });
    }
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6Byte { pos, byte: b });
        }
    }
    let bit = |k: usize| {
        let b = bytes[1 + k / 6] - 63;
        (b >> (5 - k % 6)) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_small_words() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::path(2));
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.is_edgeless());
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(parse_graph6(""), Err(Error::Graph6Length { expected: 1, found: 0 }));
        assert_eq!(parse_graph6("D?"), Err(Error::Graph6Length { expected: 3, found: 2 }));
        assert_eq!(parse_graph6("A_?"), Err(Error::Graph6Length { expected: 2, found: 3 }));
        assert_eq!(parse_graph6("A\x7f"), Err(Error::Graph6Byte { pos: 1, byte: 0x7f }));
        assert!(matches!(parse_graph6("~?@"), Err(Error::Graph6Byte { pos: 0, .. })));
    }

    #[test]
    fn encoder_rejects_long_form() {
        assert_eq!(Graph::empty(63).to_graph6(), Err(Error::Graph6TooLarge(63)));
        assert!(Graph::path(62).to_graph6().is_ok());
    }
}
