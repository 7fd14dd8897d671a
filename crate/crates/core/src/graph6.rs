//! The graph6 text encoding (one graph per line, printable ASCII 63..=126).

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_N: usize = 68_719_476_735;

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

/// Parses a single graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted. Offsets in errors are relative to the start of
/// `text`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let bytes = text.trim_end().as_bytes();
    if bytes.len() <= start {
        return Err(err(start, "missing vertex count"));
    }
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        if !(BIAS..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }

    let (n, mut pos) = decode_n(bytes, start)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let available = bytes.len() - pos;
    if available < needed {
        return Err(err(bytes.len(), "edge data is truncated"));
    }
    if available > needed {
        return Err(err(pos + needed, "trailing bytes after edge data"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - BIAS;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = bytes[pos + needed - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(pos + needed - 1, "non-zero padding bits"));
        }
    }
    pos += needed;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

fn decode_n(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let word = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return Err(err(bytes.len(), "truncated vertex count"));
        }
        Ok(bytes[from..from + count].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    if bytes[start] != 126 {
        return Ok(((bytes[start] - BIAS) as usize, start + 1));
    }
    if bytes.get(start + 1) == Some(&126) {
        let n = word(start + 2, 6)?;
        if n <= 258_047 {
            return Err(err(start, "vertex count uses a longer encoding than necessary"));
        }
        return Ok((n, start + 8));
    }
    let n = word(start + 1, 3)?;
    if n < 63 {
        return Err(err(start, "vertex count uses a longer encoding than necessary"));
    }
    Ok((n, start + 4))
}

/// Canonical graph6 line (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
