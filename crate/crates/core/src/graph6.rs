//! The graph6 text encoding.
//!
//! A graph6 string is a vertex-count header `N(n)` followed by the upper
//! triangle of the adjacency matrix, column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`), packed six bits per byte, most significant bit first, each
//! byte offset by 63. Orders up to 62 use a one-byte header; orders up to
//! 258047 use `~` followed by three header bytes.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Graph6Error;
use crate::graph::{Graph, GraphBuilder};

const OFFSET: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const HEADER: &str = ">>graph6<<";

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Encodes `g` as a graph6 string without a trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MEDIUM_MAX,
        "graph6 encoding supports at most {MEDIUM_MAX} vertices"
    );
    let mut out = Vec::with_capacity(4 + bit_count(n).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | col.contains(i) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` prefix and a
/// trailing line terminator are accepted.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b'&' || bytes[0] == b':' {
        return Err(Graph6Error::UnsupportedVariant);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte { byte, offset });
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    } else if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let n = bytes[2..8]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | (b - OFFSET) as u64);
        return Err(Graph6Error::TooManyVertices(n));
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        (n, &bytes[4..])
    };
    let bits = bit_count(n);
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = body[expected - 1] - OFFSET;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.push_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}
