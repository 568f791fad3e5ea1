//! graph6 serialization, bit-exact per the published format: header byte
//! `63 + n` for n <= 62 (`~`-prefixed 18-bit header above that), then the
//! upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed six per
//! byte, each byte offset by 63, with the final group zero-padded.

use std::fmt;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Graph6Error {
    /// Empty input, a header byte outside the printable range, or a
    /// non-canonical long-form header.
    MalformedHeader,
    /// The encoded vertex count exceeds what this crate supports.
    TooLarge { order: u64 },
    /// Fewer adjacency bytes than the vertex count requires.
    TruncatedBitStream,
    /// More bytes than the vertex count requires.
    TrailingGarbage,
    /// A body byte outside the graph6 alphabet (63..=126).
    InvalidByte { position: usize, byte: u8 },
    /// Unused bits of the final group were not zero.
    NonzeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::MalformedHeader => write!(f, "malformed graph6 header"),
            Graph6Error::TooLarge { order } => {
                write!(f, "graph6 order {order} exceeds the supported maximum of {MAX_VERTICES}")
            }
            Graph6Error::TruncatedBitStream => write!(f, "graph6 adjacency bits truncated"),
            Graph6Error::TrailingGarbage => write!(f, "trailing bytes after graph6 adjacency bits"),
            Graph6Error::InvalidByte { position, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at position {position}")
            }
            Graph6Error::NonzeroPadding => write!(f, "nonzero padding bits in final graph6 group"),
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Encode a graph as a graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // 18-bit header; n <= 64 here, the 36-bit form is never needed.
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode one graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader);
    }
    let (order, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit form encodes orders >= 258048; all beyond support.
            let order = decode_header_group(bytes, 2, 6)?;
            return Err(Graph6Error::TooLarge { order });
        }
        let order = decode_header_group(bytes, 1, 3)?;
        if order <= 62 {
            // Canonical encoding uses the short header for small orders.
            return Err(Graph6Error::MalformedHeader);
        }
        (order, 4)
    } else {
        if !(63..=125).contains(&bytes[0]) {
            return Err(Graph6Error::MalformedHeader);
        }
        ((bytes[0] - 63) as u64, 1)
    };
    if order as usize > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { order });
    }
    let n = order as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < nbytes {
        return Err(Graph6Error::TruncatedBitStream);
    }
    if body.len() > nbytes {
        return Err(Graph6Error::TrailingGarbage);
    }
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                position: header_len + k,
                byte: b,
            });
        }
    }
    let mut g = Graph::new(n);
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos / 6] - 63;
            if byte & (1 << (5 - pos % 6)) != 0 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    // The spare bits of the last group must be zero.
    if nbits % 6 != 0 {
        let pad = body[nbytes - 1] - 63;
        if pad & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

fn decode_header_group(bytes: &[u8], start: usize, len: usize) -> Result<u64, Graph6Error> {
    if bytes.len() < start + len {
        return Err(Graph6Error::MalformedHeader);
    }
    let mut value = 0u64;
    for &b in &bytes[start..start + len] {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::MalformedHeader);
        }
        value = (value << 6) | u64::from(b - 63);
    }
    Ok(value)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        parse_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_checked_vectors() {
        assert_eq!(emit_graph6(&Graph::new(1)), "@");
        assert_eq!(emit_graph6(&Graph::from_edges(2, &[(0, 1)])), "A_");
        assert_eq!(emit_graph6(&Graph::new(0)), "?");
        assert_eq!(emit_graph6(&Graph::new(2)), "A?");
        // K4 minus one edge, checked bit by bit: x01 x02 x12 x03 x13 x23 =
        // 1 1 1 1 1 0 -> 111110 = 62 -> byte 125 = '}'.
        let mut g = Graph::complete(4);
        g.remove_edge(2, 3);
        assert_eq!(emit_graph6(&g), "C}");
    }

    #[test]
    fn round_trip_small_vectors() {
        for g in [
            Graph::new(0),
            Graph::new(1),
            Graph::cycle(5),
            Graph::petersen(),
            Graph::complete(7),
            Graph::cycle(6).power(2),
        ] {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_header_round_trip() {
        for n in [63, 64] {
            let mut g = Graph::new(n);
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            let s = emit_graph6(&g);
            assert_eq!(s.as_bytes()[0], 126);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn distinct_parse_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6("\u{1}"), Err(Graph6Error::MalformedHeader));
        // C5 is "DQc"; chop or extend the bit stream.
        let c5 = emit_graph6(&Graph::cycle(5));
        assert_eq!(
            parse_graph6(&c5[..c5.len() - 1]),
            Err(Graph6Error::TruncatedBitStream)
        );
        let mut long = c5.clone();
        long.push('?');
        assert_eq!(parse_graph6(&long), Err(Graph6Error::TrailingGarbage));
        // Body byte outside the alphabet.
        assert!(matches!(
            parse_graph6("D\u{1}\u{1}"),
            Err(Graph6Error::InvalidByte { .. })
        ));
        // K1 long-form header is non-canonical.
        assert_eq!(parse_graph6("~??@"), Err(Graph6Error::MalformedHeader));
        // K2's single edge byte '_' with a padding bit forced on.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn rejects_oversized_orders() {
        // Order 65 via the long header: 65 = 0b000001_000001 -> "~?@A".
        assert_eq!(
            parse_graph6("~?@A"),
            Err(Graph6Error::TooLarge { order: 65 })
        );
    }
}
