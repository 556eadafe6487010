//! Simple connected graphs and their all-pairs distance data.

use std::collections::VecDeque;

use thiserror::Error;

/// Errors raised while building graphs or running tree-only operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("invalid edge ({u}, {v}) for a simple graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("expected a tree, got {m} edges on {n} vertices")]
    NotATree { n: usize, m: usize },
}

/// An immutable simple connected graph with dense 0-based vertex indices.
///
/// Neighbor lists are sorted, so every traversal below is deterministic.
/// Connectivity is enforced at construction; downstream code may assume all
/// distances are finite. The one-vertex graph is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected, duplicate edges collapse, and the result must be connected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        let g = Graph { adj, m };
        if !g.reaches_all_from_zero() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected with `m = n - 1`, hence acyclic.
    pub fn is_tree(&self) -> bool {
        self.m == self.n() - 1
    }

    pub fn distance_profile(&self) -> DistanceProfile {
        DistanceProfile::compute(self)
    }

    /// BFS distances from one source; every entry is finite by construction.
    pub fn bfs_distances(&self, src: usize) -> Vec<u16> {
        let n = self.n();
        let mut dist = vec![u16::MAX; n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == u16::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn reaches_all_from_zero(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n()
    }
}

/// All-pairs distances plus the per-vertex data every index needs:
/// eccentricity, total distance, and degree.
///
/// Distances are stored as a flat row-major `n * n` matrix of 16-bit values.
#[derive(Debug, Clone)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<u16>,
    ecc: Vec<u16>,
    totdist: Vec<u64>,
    deg: Vec<u32>,
}

impl DistanceProfile {
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![0u16; n * n];
        let mut ecc = vec![0u16; n];
        let mut totdist = vec![0u64; n];
        for src in 0..n {
            let row = g.bfs_distances(src);
            let mut e = 0u16;
            let mut t = 0u64;
            for (v, &d) in row.iter().enumerate() {
                debug_assert!(d != u16::MAX);
                dist[src * n + v] = d;
                e = e.max(d);
                t += u64::from(d);
            }
            ecc[src] = e;
            totdist[src] = t;
        }
        let deg = (0..n).map(|v| g.degree(v) as u32).collect();
        DistanceProfile {
            n,
            dist,
            ecc,
            totdist,
            deg,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u16 {
        self.dist[u * self.n + v]
    }

    pub fn ecc(&self, v: usize) -> u16 {
        self.ecc[v]
    }

    pub fn total_distance(&self, v: usize) -> u64 {
        self.totdist[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.deg[v]
    }

    pub fn diameter(&self) -> u16 {
        self.ecc.iter().copied().max().unwrap_or(0)
    }

    pub fn radius(&self) -> u16 {
        self.ecc.iter().copied().min().unwrap_or(0)
    }
}

/// All vertices share one eccentricity (radius equals diameter).
pub fn is_self_centered(g: &Graph) -> bool {
    let p = g.distance_profile();
    p.radius() == p.diameter()
}

pub fn is_regular(g: &Graph) -> bool {
    let d = g.degree(0);
    (1..g.n()).all(|v| g.degree(v) == d)
}

/// A tree whose non-leaf vertices induce a path. Paths and stars qualify,
/// as do the one- and two-vertex trees.
pub fn is_caterpillar(g: &Graph) -> Result<bool, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree { n: g.n(), m: g.m() });
    }
    // Internal vertices of a tree always induce a subtree; it is a path
    // exactly when no internal vertex has three internal neighbors.
    let internal: Vec<bool> = (0..g.n()).map(|v| g.degree(v) >= 2).collect();
    for v in 0..g.n() {
        if internal[v] {
            let internal_nbrs = g.neighbors(v).iter().filter(|&&u| internal[u]).count();
            if internal_nbrs > 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Path of any order, including the one- and two-vertex paths.
pub fn is_path_graph(g: &Graph) -> bool {
    g.is_tree() && g.max_degree() <= 2
}

/// Star of any order `>= 2`; the two-vertex star is the single edge.
pub fn is_star_graph(g: &Graph) -> bool {
    g.is_tree() && g.n() >= 2 && (g.n() == 2 || g.max_degree() == g.n() - 1)
}
