//! graph6 encoding: an order prefix followed by the upper triangle of the
//! adjacency matrix in column-major order, packed big-endian into 6-bit groups
//! offset by 63.

use crate::error::{Error, Result};

use super::Graph;

/// Optional file header; tolerated at the start of a line and skipped.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order expressible with the 4-byte order prefix.
pub(crate) const MAX_G6_ORDER: usize = 258_047;

/// Parses one graph6 line into a dense graph.
///
/// Surrounding whitespace and a leading `>>graph6<<` header are ignored.
/// Orders above the dense tier are reported as `Unsupported`; decode those
/// with [`super::SparseGraph::from_graph6`].
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let (n, edges) = decode(line)?;
    if n > super::MAX_ORDER {
        return Err(Error::unsupported(format!(
            "graph of order {n} exceeds the dense tier; parse it as a SparseGraph"
        )));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph6(g: &Graph) -> String {
    encode(g.order(), |i, j| g.has_edge(i, j))
}

/// Decodes a graph6 line to its order and edge list `(i, j)` with `i < j`.
pub(crate) fn decode(line: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let trimmed_start = line.len() - line.trim_start().len();
    let mut body = line.trim();
    let mut base = trimmed_start;
    if let Some(rest) = body.strip_prefix(GRAPH6_HEADER) {
        body = rest;
        base += GRAPH6_HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte 0x{b:02x} outside 63..=126")));
        }
    }

    let (n, header_len) = decode_order(bytes).map_err(|(i, why)| Error::parse(base + i, why))?;

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < nbytes {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "truncated bit string: {} data bytes for order {n}, expected {nbytes}",
                data.len()
            ),
        ));
    }
    if data.len() > nbytes {
        return Err(Error::parse(
            base + header_len + nbytes,
            format!("trailing bytes after {nbytes} data bytes for order {n}"),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = data[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(
                base + header_len + nbytes - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok((n, edges))
}

fn decode_order(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let group = |range: std::ops::Range<usize>| -> std::result::Result<usize, (usize, String)> {
        if bytes.len() < range.end {
            return Err((bytes.len(), "truncated order header".to_string()));
        }
        Ok(bytes[range]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() > 1 && bytes[1] == 126 {
        let n = group(2..8)?;
        if n <= MAX_G6_ORDER {
            return Err((0, format!("order {n} must use the short header form")));
        }
        return Err((0, format!("order {n} is beyond the supported range")));
    }
    let n = group(1..4)?;
    if n < 63 {
        return Err((0, format!("order {n} must use the 1-byte header form")));
    }
    Ok((n, 4))
}

pub(crate) fn encode(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> String {
    assert!(n <= MAX_G6_ORDER, "graph6 order {n} out of range");
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
