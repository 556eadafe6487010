//! Isomorphism-free enumeration of small trees and connected graphs.
//!
//! The canonical form of a graph is the lexicographically smallest
//! adjacency bitstring over all vertex relabelings, with pairs ordered
//! column by column exactly as in graph6. Minimization runs as a
//! backtracking search over partial labelings with prefix pruning, which
//! visits the same minimum the full factorial sweep would.
//!
//! Trees are generated as canonical rooted level sequences in decreasing
//! lexicographic order; a rooted tree is emitted as a free tree exactly
//! when its root and child order match the tree's own center-rooted
//! canonical form, so every unlabeled tree appears once. Connected graphs
//! are grown one vertex at a time from canonical representatives of the
//! previous order (every connected graph has a non-cutting vertex, so
//! nothing is missed), deduplicated by canonical form.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{DistanceProfile, Graph};

/// Largest tree order the generator accepts.
pub const MAX_TREE_ORDER: usize = 16;
/// Largest connected-graph order the generator accepts.
pub const MAX_GRAPH_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("tree order {0} outside 1..={MAX_TREE_ORDER}")]
    TreeOrderOutOfRange(usize),
    #[error("graph order {0} outside 1..={MAX_GRAPH_ORDER}")]
    GraphOrderOutOfRange(usize),
}

/// Canonical form of a graph of order at most 16: the minimal adjacency
/// bitstring packed into an integer, most significant bit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        usize::from(self.n)
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn adjacency_rows(g: &Graph) -> Vec<u16> {
    let mut rows = vec![0u16; g.n()];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

/// Bitstring of the labeling as given (no minimization).
fn bits_of_rows(n: usize, rows: &[u16]) -> u128 {
    let mut bits = 0u128;
    for j in 1..n {
        for row in rows.iter().take(j) {
            bits = (bits << 1) | u128::from((row >> j) & 1);
        }
    }
    bits
}

fn graph_from_bits(n: usize, bits: u128) -> Graph {
    let len = pair_count(n);
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (bits >> (len - 1 - idx)) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("canonical bits decode to a valid graph")
}

struct MinBitsSearch<'a> {
    n: usize,
    rows: &'a [u16],
    total_bits: usize,
    perm: Vec<usize>,
    used: u16,
    best: u128,
}

impl MinBitsSearch<'_> {
    /// Extends the labeling by one vertex. `partial` holds the bits fixed by
    /// the first `level` labels; a branch dies as soon as that prefix
    /// exceeds the corresponding prefix of the best completed labeling.
    fn descend(&mut self, level: usize, partial: u128) {
        if level == self.n {
            if partial < self.best {
                self.best = partial;
            }
            return;
        }
        let prefix_len = pair_count(level + 1);
        for u in 0..self.n {
            if self.used & (1 << u) != 0 {
                continue;
            }
            let mut col = 0u128;
            for i in 0..level {
                col = (col << 1) | u128::from((self.rows[self.perm[i]] >> u) & 1);
            }
            let next = (partial << level) | col;
            if next > self.best >> (self.total_bits - prefix_len) {
                continue;
            }
            self.perm.push(u);
            self.used |= 1 << u;
            self.descend(level + 1, next);
            self.used &= !(1 << u);
            self.perm.pop();
        }
    }
}

fn canonical_bits(n: usize, rows: &[u16]) -> u128 {
    if n <= 1 {
        return 0;
    }
    let mut search = MinBitsSearch {
        n,
        rows,
        total_bits: pair_count(n),
        perm: Vec::with_capacity(n),
        used: 0,
        best: bits_of_rows(n, rows),
    };
    search.descend(0, 0);
    search.best
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm {
        n: g.n() as u8,
        bits: canonical_bits(g.n(), &adjacency_rows(g)),
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// Streams every unlabeled tree of the given order exactly once, `n <= 16`.
/// The stream is deterministic and restartable; collect or chunk as needed.
pub fn all_trees(n: usize) -> Result<TreeStream, EnumError> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(EnumError::TreeOrderOutOfRange(n));
    }
    Ok(TreeStream {
        level: Some((0..n as u8).collect()),
    })
}

pub struct TreeStream {
    level: Option<Vec<u8>>,
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(seq) = self.level.take() {
            self.level = rooted_successor(&seq);
            if let Some(g) = free_tree_from_rooted(&seq) {
                return Some(g);
            }
        }
        None
    }
}

/// Next canonical rooted level sequence in decreasing lexicographic order.
fn rooted_successor(seq: &[u8]) -> Option<Vec<u8>> {
    let p = seq.iter().rposition(|&d| d >= 2)?;
    let q = seq[..p]
        .iter()
        .rposition(|&d| d == seq[p] - 1)
        .expect("every depth >= 2 has an earlier parent level");
    let mut next = seq.to_vec();
    for i in p..next.len() {
        next[i] = next[i - (p - q)];
    }
    Some(next)
}

fn tree_adjacency(seq: &[u8]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); seq.len()];
    let mut stack: Vec<usize> = Vec::new(); // current root-to-vertex path
    for (v, &d) in seq.iter().enumerate() {
        stack.truncate(usize::from(d));
        if let Some(&parent) = stack.last() {
            adj[parent].push(v);
            adj[v].push(parent);
        }
        stack.push(v);
    }
    adj
}

/// One or two adjacent middle vertices, found by peeling leaves.
fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &u in &adj[v] {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

/// Canonical level sequence of the tree rooted at `root`: children are
/// ordered by decreasing subtree sequence, giving the lexicographically
/// largest preorder level listing.
fn canonical_rooted_sequence(adj: &[Vec<usize>], root: usize) -> Vec<u8> {
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize, depth: u8) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| encode(adj, u, v, depth + 1))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        for k in kids {
            out.extend(k);
        }
        out
    }
    encode(adj, root, usize::MAX, 0)
}

/// Emits the rooted sequence as a free tree exactly when it coincides with
/// the center-rooted canonical sequence of its own tree.
fn free_tree_from_rooted(seq: &[u8]) -> Option<Graph> {
    let adj = tree_adjacency(seq);
    let canonical = tree_centers(&adj)
        .into_iter()
        .map(|c| canonical_rooted_sequence(&adj, c))
        .max()
        .expect("a tree has at least one center");
    if canonical != seq {
        return None;
    }
    let n = seq.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (v, nbrs) in adj.iter().enumerate() {
        for &u in nbrs {
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Some(Graph::from_edges(n, &edges).expect("level sequence decodes to a tree"))
}

/// Streams every unlabeled connected graph of the given order exactly once,
/// `n <= 8`, in increasing canonical-form order.
pub fn all_connected_graphs(n: usize) -> Result<GraphStream, EnumError> {
    if n == 0 || n > MAX_GRAPH_ORDER {
        return Err(EnumError::GraphOrderOutOfRange(n));
    }
    Ok(GraphStream {
        n,
        bits: connected_canonical_bits(n).into_iter(),
    })
}

pub struct GraphStream {
    n: usize,
    bits: std::vec::IntoIter<u128>,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.bits.next().map(|b| graph_from_bits(self.n, b))
    }
}

impl ExactSizeIterator for GraphStream {
    fn len(&self) -> usize {
        self.bits.len()
    }
}

fn rows_from_bits(n: usize, bits: u128) -> Vec<u16> {
    let len = pair_count(n);
    let mut rows = vec![0u16; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (bits >> (len - 1 - idx)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    rows
}

/// Canonical bitstrings of all connected graphs of order `n`, grown one
/// vertex at a time with the new vertex attached to every nonempty subset.
fn connected_canonical_bits(n: usize) -> Vec<u128> {
    let mut current = vec![0u128]; // the one-vertex graph
    for k in 2..=n {
        let mut next: Vec<u128> = current
            .par_iter()
            .flat_map_iter(|&bits| {
                let rows = rows_from_bits(k - 1, bits);
                (1u32..(1 << (k - 1))).map(move |subset| {
                    let mut rows = rows.clone();
                    rows.push(0);
                    for i in 0..k - 1 {
                        if subset >> i & 1 == 1 {
                            rows[i] |= 1 << (k - 1);
                            rows[k - 1] |= 1 << i;
                        }
                    }
                    canonical_bits(k, &rows)
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        current = next;
    }
    current
}

/// Conjunction of optional bounds used to filter enumeration streams.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FilterSpec {
    pub diameter: Option<u16>,
    pub radius: Option<u16>,
    pub max_degree: Option<usize>,
}

impl FilterSpec {
    pub fn matches(&self, g: &Graph, p: &DistanceProfile) -> bool {
        self.diameter.is_none_or(|d| p.diameter() == d)
            && self.radius.is_none_or(|r| p.radius() == r)
            && self.max_degree.is_none_or(|b| g.max_degree() <= b)
    }
}

/// Lazy filter over any graph stream.
pub fn filtered<I>(stream: I, spec: FilterSpec) -> impl Iterator<Item = Graph>
where
    I: Iterator<Item = Graph>,
{
    stream.filter(move |g| spec.matches(g, &g.distance_profile()))
}
