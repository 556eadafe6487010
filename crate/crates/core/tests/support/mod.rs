//! Independent reference implementations used to cross-check the
//! library: a Floyd-Warshall metric, a permutation-minimum canonizer,
//! and two brute-force enumerators.

use std::collections::BTreeSet;

use eccx_core::enumerate::canonical_form;
use eccx_core::Graph;

pub const INF: u32 = u32::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k].saturating_add(d[k][j]);
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).expect("relabeling preserves connectivity")
}

fn upper_triangle_bits(g: &Graph) -> u128 {
    let n = g.n();
    let mut bits = 0u128;
    let mut idx = 0u32;
    let total = (n * (n - 1) / 2) as u32;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bits |= 1 << (total - 1 - idx);
            }
            idx += 1;
        }
    }
    bits
}

/// Minimum adjacency encoding over every permutation, generated with
/// Heap's algorithm. Exponential; callers keep n small.
pub fn permutation_minimum_bits(g: &Graph) -> u128 {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut best = upper_triangle_bits(&relabel(g, &perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(upper_triangle_bits(&relabel(g, &perm)));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Canonical forms of every connected graph of order n, found by trying
/// all 2^C(n,2) edge subsets.
pub fn connected_by_edge_subsets(n: usize) -> BTreeSet<(u8, u128)> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if let Ok(g) = Graph::from_edges(n, &edges) {
            let c = canonical_form(&g);
            out.insert((c.order() as u8, c.bits()));
        }
    }
    out
}

pub fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
        edges.push((leaf, s));
        used[leaf] = true;
        degree[s] -= 1;
    }
    let (a, b) = {
        let mut rest = (0..n).filter(|&v| degree[v] == 1 && !used[v]);
        (rest.next().unwrap(), rest.next().unwrap())
    };
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("Pruefer decode is a tree")
}

/// Canonical forms of every tree of order n >= 2, one per labeled
/// Pruefer sequence. n^(n-2) decodes; callers keep n small.
pub fn trees_by_pruefer(n: usize) -> BTreeSet<(u8, u128)> {
    assert!(n >= 2);
    let mut out = BTreeSet::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let t = tree_from_pruefer(n, &seq);
        let c = canonical_form(&t);
        out.insert((c.order() as u8, c.bits()));
        let mut pos = len;
        while pos > 0 {
            if seq[pos - 1] + 1 < n {
                seq[pos - 1] += 1;
                break;
            }
            seq[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    out
}
