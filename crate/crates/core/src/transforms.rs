//! Tree rewrites that trade index mass between the two eccentricity
//! indices: relocating deep pendant leaves one step toward a longest
//! path, relocating a hub's pendant leaves onto a more central neighbor,
//! and straightening two pendant paths into one. Each rewrite returns the
//! rewritten graph together with the exact index deltas.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::families::{pendant_paths, FamilyError};
use crate::graph::{is_caterpillar, is_star_graph, DistanceProfile, Graph, GraphError};
use crate::invariants::{index_report, narrowed, IndexReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("expected a tree, got {n} vertices and {m} edges")]
    NotATree { n: usize, m: usize },
    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },
    #[error("vertex {u} has no neighbor to move besides {v}")]
    NothingToMove { u: usize, v: usize },
    #[error("({u}, {v}) is not a donor/receiver pair of any deep branch")]
    InvalidShiftSite { u: usize, v: usize },
    #[error("eccentricity precondition unmet for donor {w} and receiver {z}")]
    EccentricityPrecondition { w: usize, z: usize },
    #[error("no applicable rewrite for this tree")]
    NoCandidate,
    #[error("pendant path merge needs ecc(w) >= p >= q >= 1, got ecc {r} with p {p}, q {q}")]
    MergeHypothesis { r: usize, p: usize, q: usize },
    #[error("iteration exceeded {0} steps without reaching its fixed point")]
    IterationCap(usize),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Index movement of one rewrite. Deltas are before minus after, so a
/// positive delta means the rewrite lowered that index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransformTrace {
    pub before: IndexReport,
    pub after: IndexReport,
    pub delta_xi_d: i64,
    pub delta_xi_c: i64,
    pub moved_set_size: usize,
}

impl TransformTrace {
    /// Decrease of ξd − ξc achieved by the rewrite.
    pub fn gap_decrease(&self) -> i64 {
        self.delta_xi_d - self.delta_xi_c
    }
}

fn trace_between(before: &Graph, after: &Graph, moved_set_size: usize) -> TransformTrace {
    let b = index_report(before);
    let a = index_report(after);
    TransformTrace {
        before: b,
        after: a,
        delta_xi_d: b.xi_d - a.xi_d,
        delta_xi_c: b.xi_c - a.xi_c,
        moved_set_size,
    }
}

/// A donor vertex whose pendant neighbors move onto the receiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShiftSite {
    pub donor: usize,
    pub receiver: usize,
}

fn ensure_tree(t: &Graph) -> Result<(), TransformError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(TransformError::NotATree { n: t.n(), m: t.m() })
    }
}

/// Reattaches every neighbor of `u` except `v` to `v`. Callers guarantee
/// the moved vertices are leaves, so only their single edges move.
fn relocate_pendants(t: &Graph, u: usize, v: usize) -> Graph {
    let edges: Vec<(usize, usize)> = t
        .edges()
        .map(|(a, b)| {
            if a == u && b != v {
                (v, b)
            } else if b == u && a != v {
                (a, v)
            } else {
                (a, b)
            }
        })
        .collect();
    Graph::from_edges(t.n(), &edges).expect("pendant relocation keeps the tree connected")
}

/// Unique path between two vertices of a tree.
fn tree_path(t: &Graph, p: &DistanceProfile, a: usize, b: usize) -> Vec<usize> {
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        cur = *t
            .neighbors(cur)
            .iter()
            .find(|&&x| p.dist(x, b) + 1 == p.dist(cur, b))
            .expect("a tree path always steps closer to its endpoint");
        path.push(cur);
    }
    path
}

/// Explores the branch hanging at `z` when its two path neighbors are cut
/// off; any leaf at depth two or more yields a donor (its parent) and a
/// receiver (the grandparent, one step closer to `z`).
fn collect_branch_sites(
    t: &Graph,
    prev: usize,
    z: usize,
    next: usize,
    sites: &mut BTreeSet<ShiftSite>,
) {
    let n = t.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([z]);
    depth[z] = 0;
    while let Some(x) = queue.pop_front() {
        for &y in t.neighbors(x) {
            if y == prev || y == next || depth[y] != usize::MAX {
                continue;
            }
            depth[y] = depth[x] + 1;
            parent[y] = x;
            queue.push_back(y);
        }
    }
    let k = (0..n)
        .filter(|&v| depth[v] != usize::MAX)
        .map(|v| depth[v])
        .max()
        .unwrap_or(0);
    if k < 2 {
        return;
    }
    for x in 0..n {
        if depth[x] == k {
            let donor = parent[x];
            sites.insert(ShiftSite {
                donor,
                receiver: parent[donor],
            });
        }
    }
}

/// Every donor/receiver pair of the deep-branch configuration: along each
/// longest path, a branch hanging at an internal vertex that reaches depth
/// two or more. The donor holds the branch's deepest leaves, the receiver
/// is the donor's neighbor toward the branch root. Empty exactly when the
/// tree is a caterpillar.
pub fn spine_shift_candidates(t: &Graph) -> Result<Vec<ShiftSite>, TransformError> {
    ensure_tree(t)?;
    let n = t.n();
    let p = t.distance_profile();
    let d = p.diameter();
    let mut sites = BTreeSet::new();
    if d >= 2 {
        for a in 0..n {
            for b in a + 1..n {
                if p.dist(a, b) != d {
                    continue;
                }
                let path = tree_path(t, &p, a, b);
                for i in 1..path.len() - 1 {
                    collect_branch_sites(t, path[i - 1], path[i], path[i + 1], &mut sites);
                }
            }
        }
    }
    Ok(sites.into_iter().collect())
}

/// Moves the pendant neighbors of `u` one step toward the longest path.
/// `(u, v)` must be a pair reported by [`spine_shift_candidates`].
pub fn shift_leaves_toward_spine(
    t: &Graph,
    u: usize,
    v: usize,
) -> Result<(Graph, TransformTrace), TransformError> {
    ensure_tree(t)?;
    if !t.has_edge(u, v) {
        return Err(TransformError::NotAdjacent { u, v });
    }
    if t.degree(u) < 2 {
        return Err(TransformError::NothingToMove { u, v });
    }
    if !spine_shift_candidates(t)?.contains(&ShiftSite {
        donor: u,
        receiver: v,
    }) {
        return Err(TransformError::InvalidShiftSite { u, v });
    }
    // In the configuration all of u's neighbors besides v are leaves.
    debug_assert!(t.neighbors(u).iter().all(|&x| x == v || t.degree(x) == 1));
    let after = relocate_pendants(t, u, v);
    let trace = trace_between(t, &after, t.degree(u) - 1);
    Ok((after, trace))
}

/// Adjacent pairs with eccentricities one and two below the diameter; at
/// diameter three, where no such pair exists, the two central vertices in
/// either order. These are the positions from which pendant leaves can
/// move inward until only a star remains.
pub fn star_ward_candidates(t: &Graph) -> Result<Vec<ShiftSite>, TransformError> {
    ensure_tree(t)?;
    let p = t.distance_profile();
    let d = p.diameter();
    let mut sites = BTreeSet::new();
    if d >= 3 {
        for w in 0..t.n() {
            if t.degree(w) < 2 {
                continue;
            }
            for &z in t.neighbors(w) {
                let ok = if d == 3 {
                    p.ecc(w) == 2 && p.ecc(z) == 2
                } else {
                    p.ecc(w) == d - 1 && p.ecc(z) == d - 2
                };
                if ok {
                    sites.insert(ShiftSite {
                        donor: w,
                        receiver: z,
                    });
                }
            }
        }
    }
    Ok(sites.into_iter().collect())
}

/// Moves every neighbor of `w` except `z` onto `z`. Requires ε(w) one
/// below the diameter and ε(z) two below; at diameter three both must be
/// central. Those neighbors are necessarily leaves.
pub fn star_ward_shift(
    t: &Graph,
    w: usize,
    z: usize,
) -> Result<(Graph, TransformTrace), TransformError> {
    ensure_tree(t)?;
    if !t.has_edge(w, z) {
        return Err(TransformError::NotAdjacent { u: w, v: z });
    }
    if t.degree(w) < 2 {
        return Err(TransformError::NothingToMove { u: w, v: z });
    }
    let p = t.distance_profile();
    let d = p.diameter();
    let ok = (d == 3 && p.ecc(w) == 2 && p.ecc(z) == 2)
        || (d >= 4 && p.ecc(w) == d - 1 && p.ecc(z) == d - 2);
    if !ok {
        return Err(TransformError::EccentricityPrecondition { w, z });
    }
    debug_assert!(t.neighbors(w).iter().all(|&x| x == z || t.degree(x) == 1));
    let after = relocate_pendants(t, w, z);
    let trace = trace_between(t, &after, t.degree(w) - 1);
    Ok((after, trace))
}

/// Applies the inward hub shift repeatedly, smallest candidate first,
/// until only a star remains. Each step turns the donor into a leaf, so
/// the leaf count grows and at most n steps occur.
pub fn iterate_star_ward(t: &Graph) -> Result<(Vec<TransformTrace>, Graph), TransformError> {
    ensure_tree(t)?;
    let cap = t.n();
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while cur.n() > 2 && !is_star_graph(&cur) {
        if steps.len() >= cap {
            return Err(TransformError::IterationCap(cap));
        }
        let site = star_ward_candidates(&cur)?
            .into_iter()
            .next()
            .ok_or(TransformError::NoCandidate)?;
        let (next, trace) = star_ward_shift(&cur, site.donor, site.receiver)?;
        steps.push(trace);
        cur = next;
    }
    Ok((steps, cur))
}

/// Applies the deep-branch shift repeatedly, smallest candidate first,
/// until a caterpillar remains. Each step moves at least one leaf closer
/// to the longest path, so the total leaf depth bounds the step count.
pub fn iterate_spine_shift(t: &Graph) -> Result<(Vec<TransformTrace>, Graph), TransformError> {
    ensure_tree(t)?;
    let cap = t.n() * t.n();
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while !is_caterpillar(&cur)? {
        if steps.len() >= cap {
            return Err(TransformError::IterationCap(cap));
        }
        let site = spine_shift_candidates(&cur)?
            .into_iter()
            .next()
            .ok_or(TransformError::NoCandidate)?;
        let (next, trace) = shift_leaves_toward_spine(&cur, site.donor, site.receiver)?;
        steps.push(trace);
        cur = next;
    }
    Ok((steps, cur))
}

/// Deltas of straightening the two pendant paths at `w` (lengths p and q)
/// into one path of length p+q, alongside the reference bounds those
/// deltas are measured against: a lower bound on six times the ξd delta
/// and an upper bound on the ξc delta. The bounds are reported, never
/// asserted; each fails on some small bases (the ξc cap on dominating
/// attachment vertices, the ξd floor on balanced central attachments)
/// and callers must be able to see that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MergeBounds {
    pub trace: TransformTrace,
    pub xi_d_gain_times6: i64,
    pub xi_d_lower_times6: i64,
    pub xi_c_gain: i64,
    pub xi_c_upper: i64,
}

impl MergeBounds {
    pub fn xi_d_bound_holds(&self) -> bool {
        self.xi_d_gain_times6 >= self.xi_d_lower_times6
    }

    pub fn xi_c_bound_holds(&self) -> bool {
        self.xi_c_gain <= self.xi_c_upper
    }
}

/// Compares the graph with one pendant path of length p+q at `w` against
/// the graph with two pendant paths of lengths p and q. Requires
/// ecc(w) ≥ p ≥ q ≥ 1 in the base graph.
pub fn merge_paths_delta(
    g: &Graph,
    w: usize,
    p: usize,
    q: usize,
) -> Result<MergeBounds, TransformError> {
    if w >= g.n() {
        return Err(FamilyError::BadAttachVertex { w, n: g.n() }.into());
    }
    let prof = g.distance_profile();
    let r = usize::from(prof.ecc(w));
    if q < 1 || p < q || r < p {
        return Err(TransformError::MergeHypothesis { r, p, q });
    }
    let merged = pendant_paths(g, w, p + q, 0)?;
    let split = pendant_paths(g, w, p, q)?;
    let trace = trace_between(merged.graph(), split.graph(), q);
    let (pi, qi, ri) = (p as i128, q as i128, r as i128);
    let (ni, mi) = (g.n() as i128, g.m() as i128);
    let dw = i128::from(prof.total_distance(w));
    let ecc_sum: i128 = (0..g.n()).map(|v| i128::from(prof.ecc(v))).sum();
    let bracket = 6 * dw + pi * (2 * pi - 3) + qi * (2 * qi - 3) + 3 * pi * qi - 12 * ri
        + 6 * ni * (pi + qi + ri + 1)
        + 6 * ecc_sum;
    Ok(MergeBounds {
        trace,
        xi_d_gain_times6: narrowed(6 * i128::from(trace.delta_xi_d), "xi_d delta times 6"),
        xi_d_lower_times6: narrowed(pi * qi * bracket, "merge lower bound"),
        xi_c_gain: trace.delta_xi_c,
        xi_c_upper: narrowed(qi * (3 * pi + 2 * mi - 1), "merge upper bound"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path, star};
    use crate::graph::is_path_graph;

    fn spider() -> Graph {
        // center 0 with three legs of length two
        Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    fn double_star() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn spine_candidates_on_spider() {
        let sites = spine_shift_candidates(&spider()).unwrap();
        let pairs: Vec<_> = sites.iter().map(|s| (s.donor, s.receiver)).collect();
        assert_eq!(pairs, vec![(1, 0), (3, 0), (5, 0)]);
    }

    #[test]
    fn spine_candidates_empty_on_caterpillars() {
        assert!(spine_shift_candidates(&path(6).unwrap())
            .unwrap()
            .is_empty());
        assert!(spine_shift_candidates(&star(7).unwrap())
            .unwrap()
            .is_empty());
        assert!(spine_shift_candidates(&double_star()).unwrap().is_empty());
    }

    #[test]
    fn spine_shift_moves_deep_leaf_inward() {
        let t = spider();
        let (after, trace) = shift_leaves_toward_spine(&t, 1, 0).unwrap();
        assert_eq!(trace.delta_xi_d, 42);
        assert_eq!(trace.delta_xi_c, 2);
        assert_eq!(trace.moved_set_size, 1);
        assert!(trace.gap_decrease() > 0);
        assert_eq!(trace.before.diam, trace.after.diam);
        assert!(is_caterpillar(&after).unwrap());
    }

    #[test]
    fn spine_shift_rejects_invalid_sites() {
        let t = spider();
        assert!(matches!(
            shift_leaves_toward_spine(&path(4).unwrap(), 1, 2),
            Err(TransformError::InvalidShiftSite { u: 1, v: 2 })
        ));
        assert!(matches!(
            shift_leaves_toward_spine(&t, 2, 1),
            Err(TransformError::NothingToMove { u: 2, v: 1 })
        ));
        assert!(matches!(
            shift_leaves_toward_spine(&t, 1, 3),
            Err(TransformError::NotAdjacent { u: 1, v: 3 })
        ));
        assert!(matches!(
            shift_leaves_toward_spine(&complete(4).unwrap(), 0, 1),
            Err(TransformError::NotATree { n: 4, m: 6 })
        ));
    }

    #[test]
    fn star_ward_candidates_on_paths() {
        let sites = star_ward_candidates(&path(5).unwrap()).unwrap();
        let pairs: Vec<_> = sites.iter().map(|s| (s.donor, s.receiver)).collect();
        assert_eq!(pairs, vec![(1, 2), (3, 2)]);
        // diameter-3 fallback: the two central vertices in both orders
        let sites = star_ward_candidates(&double_star()).unwrap();
        let pairs: Vec<_> = sites.iter().map(|s| (s.donor, s.receiver)).collect();
        assert_eq!(pairs, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn star_ward_shift_on_path() {
        let (after, trace) = star_ward_shift(&path(5).unwrap(), 1, 2).unwrap();
        assert_eq!(trace.delta_xi_d, 37);
        assert_eq!(trace.delta_xi_c, 5);
        assert_eq!(trace.moved_set_size, 1);
        assert_eq!(trace.gap_decrease(), 32);
        assert!(after.is_tree());
        assert_eq!(after.degree(2), 3);
    }

    #[test]
    fn star_ward_shift_on_double_star() {
        let (after, trace) = star_ward_shift(&double_star(), 0, 1).unwrap();
        assert_eq!(trace.delta_xi_d, 65);
        assert_eq!(trace.delta_xi_c, 9);
        assert_eq!(trace.moved_set_size, 2);
        assert!(is_star_graph(&after));
    }

    #[test]
    fn star_ward_rejects_invalid_sites() {
        assert!(matches!(
            star_ward_shift(&star(5).unwrap(), 0, 1),
            Err(TransformError::EccentricityPrecondition { w: 0, z: 1 })
        ));
        assert!(matches!(
            star_ward_shift(&path(5).unwrap(), 2, 1),
            Err(TransformError::EccentricityPrecondition { w: 2, z: 1 })
        ));
        assert!(matches!(
            star_ward_shift(&path(5).unwrap(), 0, 1),
            Err(TransformError::NothingToMove { u: 0, v: 1 })
        ));
    }

    #[test]
    fn star_ward_iteration_reaches_star() {
        let (steps, fixed) = iterate_star_ward(&path(5).unwrap()).unwrap();
        assert_eq!(steps.len(), 2);
        assert!(is_star_graph(&fixed));
        for t in all_order_six_trees() {
            let (steps, fixed) = iterate_star_ward(&t).unwrap();
            assert!(steps.len() <= 6);
            assert!(is_star_graph(&fixed));
            assert!(steps.iter().all(|s| s.gap_decrease() > 0));
        }
    }

    fn all_order_six_trees() -> Vec<Graph> {
        crate::enumerate::all_trees(6).unwrap().collect()
    }

    #[test]
    fn spine_iteration_reaches_caterpillar() {
        let t = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (5, 6),
                (0, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap();
        let (steps, fixed) = iterate_spine_shift(&t).unwrap();
        assert!(!steps.is_empty());
        assert!(is_caterpillar(&fixed).unwrap());
        assert!(steps.iter().all(|s| s.gap_decrease() > 0));
        let (steps, fixed) = iterate_spine_shift(&path(7).unwrap()).unwrap();
        assert!(steps.is_empty());
        assert!(is_path_graph(&fixed));
    }

    #[test]
    fn merge_reports_exact_values_on_k2() {
        let b = merge_paths_delta(&complete(2).unwrap(), 0, 1, 1).unwrap();
        assert_eq!(b.xi_d_gain_times6, 114);
        assert_eq!(b.xi_d_lower_times6, 55);
        assert!(b.xi_d_bound_holds());
        assert_eq!(b.xi_c_gain, 5);
        assert_eq!(b.xi_c_upper, 4);
        assert!(!b.xi_c_bound_holds());
        assert_eq!(b.trace.moved_set_size, 1);
        assert_eq!(b.trace.before.n, 4);
    }

    #[test]
    fn merge_reports_exact_values_on_p3_end() {
        let b = merge_paths_delta(&path(3).unwrap(), 0, 2, 1).unwrap();
        assert_eq!(b.xi_d_gain_times6, 522);
        assert_eq!(b.xi_d_lower_times6, 278);
        assert_eq!(b.xi_c_gain, 9);
        assert_eq!(b.xi_c_upper, 9);
        assert!(b.xi_d_bound_holds() && b.xi_c_bound_holds());
    }

    #[test]
    fn merge_rejects_bad_hypotheses() {
        let p3 = path(3).unwrap();
        assert!(matches!(
            merge_paths_delta(&p3, 0, 3, 1),
            Err(TransformError::MergeHypothesis { r: 2, p: 3, q: 1 })
        ));
        assert!(matches!(
            merge_paths_delta(&p3, 0, 1, 2),
            Err(TransformError::MergeHypothesis { .. })
        ));
        assert!(matches!(
            merge_paths_delta(&p3, 0, 1, 0),
            Err(TransformError::MergeHypothesis { .. })
        ));
        assert!(merge_paths_delta(&p3, 9, 1, 1).is_err());
    }
}
