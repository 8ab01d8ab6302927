//! graph6 strings and edge-list JSON, the two interchange formats.
//!
//! graph6 support covers the single-byte-size range (0 to 62 vertices): one
//! size character `n + 63`, then the upper triangle of the adjacency matrix
//! read column by column, packed six bits per character, most significant
//! bit first, zero-padded, every character offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

const OFFSET: u8 = 63;
const MAX_GRAPH6: usize = 62;

/// Serializes to graph6. Fails for graphs with more than 62 vertices.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6 {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = vec![OFFSET + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses a graph6 string. Rejects bad characters, size escapes beyond 62
/// vertices, wrong payload length, and nonzero padding bits.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid character {:?}", b as char)));
    }
    if bytes[0] == 126 {
        // '~' escapes to multi-byte sizes for n > 62, outside our range.
        return Err(Error::Graph6TooLarge(63));
    }
    let n = (bytes[0] - OFFSET) as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expect = nbits.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {expect} payload characters for n = {n}, got {}",
            payload.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = payload[idx / 6] - OFFSET;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    if !nbits.is_multiple_of(6) {
        let tail = payload[expect - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if tail & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::new(n, edges)
}

/// The edge-list JSON document: `{"n": 4, "edges": [[0,1], [2,3]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }
}
