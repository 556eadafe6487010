//! Constructors for the named graph families used by the extremal bounds.
//!
//! Vertex numbering is fixed per family so frozen expected values stay
//! stable: paths and cycles are numbered along the walk, stars put the
//! center at 0, cocktail-party graphs pair vertex `2i` with `2i + 1`, and
//! joins place the left operand's vertices first.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("join needs at least one vertex across both operands")]
    EmptyJoin,
    #[error("attachment vertex {w} out of range for base of order {n}")]
    BadAttachVertex { w: usize, n: usize },
    #[error("pendant path lengths must satisfy p >= q >= 0, got p={p}, q={q}")]
    BadPathLengths { p: usize, q: usize },
    #[error("nothing to merge: the second pendant path is empty")]
    NothingToMerge,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check(cond: bool, msg: &str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::ParamOutOfRange(msg.to_string()))
    }
}

/// Path on `n >= 1` vertices, numbered along the path.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 1, "path needs n >= 1")?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Star on `n >= 2` vertices with the center at index 0.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 2, "star needs n >= 2")?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 1, "complete graph needs n >= 1")?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cycle on `n >= 3` vertices, numbered along the cycle.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 3, "cycle needs n >= 3")?;
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cocktail-party graph on `2k` vertices, `k >= 2`: vertex `2i` is adjacent
/// to everything except its partner `2i + 1`. The result is
/// `(2k - 2)`-regular with every eccentricity equal to 2.
pub fn cocktail_party(k: usize) -> Result<Graph, FamilyError> {
    check(
        k >= 2,
        "cocktail-party graph needs k >= 2 (k = 1 is disconnected)",
    )?;
    let g = Pregraph::cocktail_party(k)?.into_graph()?;
    Ok(g)
}

/// Join of two vertex-disjoint pieces: keeps both edge sets and connects
/// every left vertex with every right vertex. Left vertices come first.
/// Operands may be internally disconnected; one may be empty, in which case
/// the other piece must already be connected.
pub fn join(left: &Pregraph, right: &Pregraph) -> Result<Graph, FamilyError> {
    let n = left.n() + right.n();
    if n == 0 {
        return Err(FamilyError::EmptyJoin);
    }
    let mut edges: Vec<(usize, usize)> = left.edges().collect();
    edges.extend(right.edges().map(|(u, v)| (u + left.n(), v + left.n())));
    edges.extend((0..left.n()).flat_map(|u| (0..right.n()).map(move |v| (u, v + left.n()))));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cocktail-party graph on `2k` vertices joined with a complete graph on the
/// remaining `n - 2k`. `k = 0` degenerates to the complete graph and
/// `2k = n` to the cocktail-party graph alone. `k = 1` is rejected: the
/// two-vertex piece is edgeless, so that member is built through [`join`]
/// directly when needed. Every member satisfies `ecc(v) = n - deg(v)`,
/// which is asserted on construction.
pub fn cp_join_complete(k: usize, n: usize) -> Result<Graph, FamilyError> {
    check(n >= 1, "cp_join_complete needs n >= 1")?;
    check(2 * k <= n, "cp_join_complete needs 2k <= n")?;
    check(
        k != 1,
        "cp_join_complete rejects k = 1; build it via join() instead",
    )?;
    let g = if k == 0 {
        complete(n)?
    } else if 2 * k == n {
        cocktail_party(k)?
    } else {
        join(
            &Pregraph::cocktail_party(k)?,
            &Pregraph::complete(n - 2 * k),
        )?
    };
    let p = g.distance_profile();
    for v in 0..g.n() {
        assert_eq!(
            usize::from(p.ecc(v)),
            n - g.degree(v),
            "family member must satisfy ecc(v) = n - deg(v) at v = {v}"
        );
    }
    Ok(g)
}

/// Caterpillar: a spine path on `spine_len` vertices (numbered 0..spine_len
/// along the path) with `leaf_counts[i]` extra leaves attached to spine
/// vertex `i`. Leaves are numbered after the spine, grouped by spine vertex.
pub fn caterpillar(spine_len: usize, leaf_counts: &[usize]) -> Result<Graph, FamilyError> {
    check(spine_len >= 1, "caterpillar needs a nonempty spine")?;
    if leaf_counts.len() != spine_len {
        return Err(FamilyError::ParamOutOfRange(format!(
            "expected {spine_len} leaf counts, got {}",
            leaf_counts.len()
        )));
    }
    let mut edges: Vec<_> = (1..spine_len).map(|v| (v - 1, v)).collect();
    let mut next = spine_len;
    for (i, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(Graph::from_edges(next, &edges)?)
}

/// A base graph with two pendant paths hanging off one vertex, plus the
/// bookkeeping needed to merge them later. Path `P` (length `p`) is numbered
/// directly after the base vertices, then path `Q` (length `q`).
#[derive(Debug, Clone)]
pub struct PendantPaths {
    graph: Graph,
    base_order: usize,
    attach: usize,
    p: usize,
    q: usize,
}

impl PendantPaths {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn attach(&self) -> usize {
        self.attach
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Vertices of path `P` in order of increasing distance from the base.
    pub fn p_vertices(&self) -> std::ops::Range<usize> {
        self.base_order..self.base_order + self.p
    }

    /// Vertices of path `Q` in order of increasing distance from the base.
    pub fn q_vertices(&self) -> std::ops::Range<usize> {
        self.base_order + self.p..self.base_order + self.p + self.q
    }
}

/// Attaches pendant paths of lengths `p >= q >= 0` (in edges) to vertex `w`.
pub fn pendant_paths(g: &Graph, w: usize, p: usize, q: usize) -> Result<PendantPaths, FamilyError> {
    if w >= g.n() {
        return Err(FamilyError::BadAttachVertex { w, n: g.n() });
    }
    if p < q {
        return Err(FamilyError::BadPathLengths { p, q });
    }
    let base_order = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    let mut prev = w;
    for i in 0..p {
        edges.push((prev, base_order + i));
        prev = base_order + i;
    }
    prev = w;
    for i in 0..q {
        edges.push((prev, base_order + p + i));
        prev = base_order + p + i;
    }
    let graph = Graph::from_edges(base_order + p + q, &edges)?;
    Ok(PendantPaths {
        graph,
        base_order,
        attach: w,
        p,
        q,
    })
}

/// Moves path `Q` to the far end of path `P`: the edge from the attachment
/// vertex to the first `Q` vertex is replaced by an edge from the last `P`
/// vertex, producing the single-pendant-path configuration with `q = 0` on
/// the same vertex set.
pub fn merge_pendant_paths(x: &PendantPaths) -> Result<Graph, FamilyError> {
    if x.q == 0 {
        return Err(FamilyError::NothingToMerge);
    }
    let u1 = x.base_order + x.p;
    let vp = x.base_order + x.p - 1; // q >= 1 forces p >= 1
    let edges: Vec<_> = x
        .graph
        .edges()
        .filter(|&e| e != (x.attach.min(u1), x.attach.max(u1)))
        .chain(std::iter::once((vp, u1)))
        .collect();
    Ok(Graph::from_edges(x.graph.n(), &edges)?)
}

/// Validated vertex set plus simple edges, without the connectivity
/// guarantee of [`Graph`]. This is the one construction path that may hold a
/// disconnected intermediate; [`join`] restores connectivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pregraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Pregraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Pregraph { n, edges: set })
    }

    /// `n` isolated vertices.
    pub fn isolated(n: usize) -> Self {
        Pregraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Pregraph { n, edges }
    }

    /// Cocktail-party piece on `2k` vertices; `k = 1` (two isolated
    /// vertices) is allowed here, unlike [`cocktail_party`].
    pub fn cocktail_party(k: usize) -> Result<Self, FamilyError> {
        check(k >= 1, "cocktail-party piece needs k >= 1")?;
        let n = 2 * k;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u / 2 == v / 2))
            .collect();
        Ok(Pregraph { n, edges })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Pregraph {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn into_graph(self) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.edges.into_iter().collect();
        Graph::from_edges(self.n, &edges)
    }
}

/// A family member described by its kind and integer parameters; this is the
/// form the command line builds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Star {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    CocktailParty {
        k: usize,
    },
    CpJoinComplete {
        k: usize,
        n: usize,
    },
    Caterpillar {
        leaf_counts: Vec<usize>,
    },
    /// Two pendant paths glued at a single vertex (spider with two legs).
    PendantPathGraph {
        p: usize,
        q: usize,
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Star { n } => star(*n),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::CocktailParty { k } => cocktail_party(*k),
            FamilySpec::CpJoinComplete { k, n } => cp_join_complete(*k, *n),
            FamilySpec::Caterpillar { leaf_counts } => caterpillar(leaf_counts.len(), leaf_counts),
            FamilySpec::PendantPathGraph { p, q } => {
                let base = Graph::from_edges(1, &[])?;
                Ok(pendant_paths(&base, 0, *p, *q)?.graph().clone())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_caterpillar, is_path_graph, is_regular, is_star_graph};

    #[test]
    fn small_paths_and_stars() {
        assert_eq!(path(1).unwrap().n(), 1);
        assert_eq!(path(2).unwrap().m(), 1);
        let s5 = star(5).unwrap();
        assert_eq!(s5.degree(0), 4);
        assert!((1..5).all(|v| s5.degree(v) == 1));
        assert!(matches!(star(1), Err(FamilyError::ParamOutOfRange(_))));
        assert!(matches!(path(0), Err(FamilyError::ParamOutOfRange(_))));
        assert!(matches!(cycle(2), Err(FamilyError::ParamOutOfRange(_))));
    }

    #[test]
    fn cycle_and_complete_shapes() {
        let c5 = cycle(5).unwrap();
        assert!(is_regular(&c5));
        assert_eq!(c5.distance_profile().diameter(), 2);
        let k4 = complete(4).unwrap();
        assert_eq!(k4.m(), 6);
    }

    #[test]
    fn cocktail_party_structure() {
        let g = cocktail_party(3).unwrap();
        assert_eq!(g.n(), 6);
        assert!(is_regular(&g));
        assert_eq!(g.degree(0), 4);
        for i in 0..3 {
            assert!(!g.has_edge(2 * i, 2 * i + 1));
        }
        let p = g.distance_profile();
        assert!((0..6).all(|v| p.ecc(v) == 2));
        assert!(matches!(
            cocktail_party(1),
            Err(FamilyError::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn join_places_left_operand_first() {
        let g = join(&Pregraph::isolated(2), &Pregraph::complete(1)).unwrap();
        assert!(is_path_graph(&g));
        assert_eq!(g.degree(2), 2);

        let wheel = join(
            &Pregraph::from_graph(&cycle(4).unwrap()),
            &Pregraph::complete(1),
        )
        .unwrap();
        let degs: Vec<_> = (0..5).map(|v| wheel.degree(v)).collect();
        assert_eq!(degs, [3, 3, 3, 3, 4]);

        assert_eq!(
            join(&Pregraph::isolated(0), &Pregraph::isolated(0)),
            Err(FamilyError::EmptyJoin)
        );
        // One empty operand: the other must already be connected.
        assert!(matches!(
            join(&Pregraph::isolated(2), &Pregraph::isolated(0)),
            Err(FamilyError::Graph(GraphError::Disconnected))
        ));
    }

    #[test]
    fn join_degree_shift() {
        let c4 = cycle(4).unwrap();
        let k2 = complete(2).unwrap();
        let g = join(&Pregraph::from_graph(&c4), &Pregraph::from_graph(&k2)).unwrap();
        for v in 0..4 {
            assert_eq!(g.degree(v), c4.degree(v) + 2);
        }
        for v in 0..2 {
            assert_eq!(g.degree(4 + v), k2.degree(v) + 4);
        }
    }

    #[test]
    fn cp_join_complete_members() {
        assert_eq!(cp_join_complete(0, 5).unwrap(), complete(5).unwrap());
        let g = cp_join_complete(2, 4).unwrap();
        assert_eq!(g, cocktail_party(2).unwrap());
        let mixed = cp_join_complete(2, 6).unwrap();
        assert_eq!(mixed.n(), 6);
        assert_eq!(mixed.degree(5), 5);
        assert!(matches!(
            cp_join_complete(1, 5),
            Err(FamilyError::ParamOutOfRange(_))
        ));
        assert!(matches!(
            cp_join_complete(3, 5),
            Err(FamilyError::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn caterpillar_shapes() {
        let s5 = caterpillar(1, &[4]).unwrap();
        assert!(is_star_graph(&s5));
        let p4 = caterpillar(4, &[0, 0, 0, 0]).unwrap();
        assert!(is_path_graph(&p4));
        let g = caterpillar(3, &[2, 0, 1]).unwrap();
        assert_eq!(g.n(), 6);
        assert!(is_caterpillar(&g).unwrap());
        assert!(matches!(
            caterpillar(2, &[1]),
            Err(FamilyError::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn pendant_path_bookkeeping() {
        let base = complete(2).unwrap();
        let x = pendant_paths(&base, 1, 2, 1).unwrap();
        assert_eq!(x.graph().n(), 5);
        assert_eq!(x.p_vertices().collect::<Vec<_>>(), [2, 3]);
        assert_eq!(x.q_vertices().collect::<Vec<_>>(), [4]);
        assert!(x.graph().has_edge(1, 2));
        assert!(x.graph().has_edge(2, 3));
        assert!(x.graph().has_edge(1, 4));

        // Zero lengths reproduce the base.
        let same = pendant_paths(&base, 0, 0, 0).unwrap();
        assert_eq!(same.graph(), &base);

        assert!(matches!(
            pendant_paths(&base, 7, 1, 0),
            Err(FamilyError::BadAttachVertex { .. })
        ));
        assert!(matches!(
            pendant_paths(&base, 0, 1, 2),
            Err(FamilyError::BadPathLengths { .. })
        ));
    }

    #[test]
    fn pendant_paths_on_one_vertex_make_a_path() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        let x = pendant_paths(&k1, 0, 3, 0).unwrap();
        assert!(is_path_graph(x.graph()));
        assert_eq!(x.graph().n(), 4);
        let y = pendant_paths(&k1, 0, 2, 1).unwrap();
        assert!(is_path_graph(y.graph()));
        assert_eq!(y.graph().degree(0), 2);
    }

    #[test]
    fn merge_moves_second_path_to_the_far_end() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        let x = pendant_paths(&k1, 0, 1, 1).unwrap();
        let merged = merge_pendant_paths(&x).unwrap();
        assert!(is_path_graph(&merged));
        assert_eq!(merged.degree(0), 1);

        let base = complete(2).unwrap();
        let y = pendant_paths(&base, 1, 2, 1).unwrap();
        let merged = merge_pendant_paths(&y).unwrap();
        assert!(!merged.has_edge(1, 4));
        assert!(merged.has_edge(3, 4));
        assert_eq!(merged.m(), y.graph().m());

        let z = pendant_paths(&base, 1, 2, 0).unwrap();
        assert_eq!(merge_pendant_paths(&z), Err(FamilyError::NothingToMerge));
    }

    #[test]
    fn family_specs_build() {
        assert!(is_star_graph(&FamilySpec::Star { n: 6 }.build().unwrap()));
        let spider = FamilySpec::PendantPathGraph { p: 2, q: 2 }.build().unwrap();
        assert_eq!(spider.n(), 5);
        assert_eq!(spider.degree(0), 2);
        let cat = FamilySpec::Caterpillar {
            leaf_counts: vec![1, 0, 2],
        }
        .build()
        .unwrap();
        assert_eq!(cat.n(), 6);
    }
}
