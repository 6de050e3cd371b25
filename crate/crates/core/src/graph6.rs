//! The graph6 text encoding.
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per
//! byte, each byte offset by 63. Files may start with the optional
//! `>>graph6<<` header, which is ignored.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const MAX_SMALL: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LARGE: usize = 68_719_476_735;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = encode_order(n);
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_order(n: usize) -> Vec<u8> {
    let sextets = |count: usize| {
        (0..count)
            .rev()
            .map(move |k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS)
    };
    if n <= MAX_SMALL {
        vec![n as u8 + BIAS]
    } else if n <= MAX_MEDIUM {
        std::iter::once(126).chain(sextets(3)).collect()
    } else {
        assert!(n <= MAX_LARGE, "graph too large for graph6");
        [126, 126].into_iter().chain(sextets(6)).collect()
    }
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header and a
/// trailing line break are ignored.
pub fn decode(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    decode_bytes(body).map_err(|e| match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + skip,
            reason,
        },
        other => other,
    })
}

fn sextet(bytes: &[u8], at: usize) -> Result<usize> {
    match bytes.get(at) {
        None => Err(Error::graph6(at, "unexpected end of input")),
        Some(&b) if (BIAS..=126).contains(&b) => Ok((b - BIAS) as usize),
        Some(&b) => Err(Error::graph6(at, format!("invalid byte 0x{b:02x}"))),
    }
}

fn decode_bytes(bytes: &[u8]) -> Result<Graph> {
    let (n, mut pos) = if bytes.first() != Some(&126) {
        (sextet(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for k in 1..4 {
            n = (n << 6) | sextet(bytes, k)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for k in 2..8 {
            n = (n << 6) | sextet(bytes, k)?;
        }
        (n, 8)
    };
    for at in pos..bytes.len() {
        sextet(bytes, at)?;
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pos + pairs.div_ceil(6);
    if bytes.len() > expected {
        return Err(Error::graph6(expected, "trailing bytes after adjacency data"));
    }
    if bytes.len() < expected {
        return Err(Error::graph6(bytes.len(), "unexpected end of input"));
    }

    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0, 1);
    let mut done = 0;
    while done < pairs {
        let chunk = sextet(bytes, pos)?;
        for bit in (0..6).rev() {
            if done == pairs {
                if chunk & ((1 << (bit + 1)) - 1) != 0 {
                    return Err(Error::graph6(pos, "non-zero padding bits"));
                }
                break;
            }
            if chunk >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
            done += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}

/// One decoded entry of a graph6 stream, tagged with its 1-based line number.
pub type Numbered = (usize, Graph);

/// Reads a graph6 stream: one graph per line. Blank lines, `#` comment lines
/// and the optional header are skipped.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<Numbered>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<graph6 stream>", e))?;
        let trimmed = line.trim();
        let trimmed = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let g = decode(trimmed).map_err(|e| match e {
            Error::Graph6 { offset, reason } => Error::graph6(offset, format!("{reason} (line {})", idx + 1)),
            other => other,
        })?;
        out.push((idx + 1, g));
    }
    Ok(out)
}
