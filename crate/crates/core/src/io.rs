//! Text formats for graphs: the graph6 line format and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (pairs (0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups offset by 63.
//! Only the short form is supported, which caps the order at 62.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    UnsupportedOrder(usize),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Decodes one graph6 line. The optional `>>graph6<<` prefix is accepted.
/// The decoded graph must satisfy the usual construction rules, so a
/// disconnected encoding is an error here.
pub fn parse_graph6(line: &str) -> Result<Graph, IoError> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(IoError::MalformedGraph6("empty input".into()));
    }
    if bytes[0] == 126 {
        return Err(IoError::MalformedGraph6(
            "long-form size encoding is not supported".into(),
        ));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(IoError::MalformedGraph6(format!(
            "size byte {} out of range",
            bytes[0]
        )));
    }
    let n = usize::from(bytes[0] - 63);
    if n == 0 {
        return Err(IoError::Graph(GraphError::EmptyGraph));
    }
    let data = &bytes[1..];
    let expected = pair_count(n).div_ceil(6);
    if data.len() != expected {
        return Err(IoError::MalformedGraph6(format!(
            "expected {expected} data bytes for order {n}, got {}",
            data.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0usize; // pair index in column-major upper-triangle order
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(IoError::MalformedGraph6(format!(
                "data byte {b} out of range"
            )));
        }
        let group = b - 63;
        for bit in (0..6).rev() {
            let set = (group >> bit) & 1 == 1;
            if idx < pair_count(n) {
                let (i, j) = pairs.next().expect("pair iterator matches pair count");
                if set {
                    edges.push((i, j));
                }
            } else if set {
                return Err(IoError::MalformedGraph6("nonzero padding bits".into()));
            }
            idx += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Encodes a graph as one graph6 line using the labeling as given.
pub fn emit_graph6(g: &Graph) -> Result<String, IoError> {
    let n = g.n();
    if n > 62 {
        return Err(IoError::UnsupportedOrder(n));
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the plain text format: a header line `n m`, then `m` lines each
/// holding one `u v` pair. Extra whitespace and blank lines are tolerated.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| IoError::MalformedEdgeList(format!("bad integer {t:?}")))
    });
    let mut next = |what: &str| {
        tokens
            .next()
            .unwrap_or_else(|| Err(IoError::MalformedEdgeList(format!("missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next("edge endpoint")?;
        let v = next("edge endpoint")?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(IoError::MalformedEdgeList(
            "trailing tokens after edges".into(),
        ));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Emits the `n m` header plus one `u v` line per edge, ascending.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
