//! Distance- and degree-based graph indices.
//!
//! Everything is exact integer arithmetic. Sums are accumulated in 128 bits
//! and must fit in `i64`; overflow aborts instead of wrapping. The two
//! eccentricity indices have an equivalent edge/pair formulation that is
//! re-evaluated in debug builds as a consistency check and is exported for
//! callers that want the same check in release builds.

use serde::Serialize;

use crate::graph::{DistanceProfile, Graph};

pub(crate) fn narrowed(value: i128, what: &str) -> i64 {
    i64::try_from(value).unwrap_or_else(|_| panic!("{what} overflows 64-bit range"))
}

/// Sum over vertices of eccentricity times degree.
pub fn eccentric_connectivity(p: &DistanceProfile) -> i64 {
    let s: i128 = (0..p.n())
        .map(|v| i128::from(p.ecc(v)) * i128::from(p.degree(v)))
        .sum();
    narrowed(s, "eccentric connectivity index")
}

/// Same index as a sum of `ecc(u) + ecc(v)` over edges.
pub fn eccentric_connectivity_edge_form(g: &Graph, p: &DistanceProfile) -> i64 {
    let s: i128 = g
        .edges()
        .map(|(u, v)| i128::from(p.ecc(u)) + i128::from(p.ecc(v)))
        .sum();
    narrowed(s, "eccentric connectivity index")
}

/// Sum over vertices of eccentricity times total distance.
pub fn eccentric_distance_sum(p: &DistanceProfile) -> i64 {
    let s: i128 = (0..p.n())
        .map(|v| i128::from(p.ecc(v)) * i128::from(p.total_distance(v)))
        .sum();
    narrowed(s, "eccentric distance sum")
}

/// Same index as a sum of `(ecc(u) + ecc(v)) * d(u, v)` over vertex pairs.
pub fn eccentric_distance_sum_pair_form(p: &DistanceProfile) -> i64 {
    let mut s: i128 = 0;
    for u in 0..p.n() {
        for v in u + 1..p.n() {
            s += (i128::from(p.ecc(u)) + i128::from(p.ecc(v))) * i128::from(p.dist(u, v));
        }
    }
    narrowed(s, "eccentric distance sum")
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener(p: &DistanceProfile) -> i64 {
    let doubled: i128 = (0..p.n()).map(|v| i128::from(p.total_distance(v))).sum();
    debug_assert!(doubled % 2 == 0);
    narrowed(doubled / 2, "Wiener index")
}

/// Sum of squared degrees.
pub fn zagreb1(p: &DistanceProfile) -> i64 {
    let s: i128 = (0..p.n())
        .map(|v| {
            let d = i128::from(p.degree(v));
            d * d
        })
        .sum();
    narrowed(s, "first Zagreb index")
}

/// Sum over vertices of degree times total distance.
pub fn degree_distance(p: &DistanceProfile) -> i64 {
    let s: i128 = (0..p.n())
        .map(|v| i128::from(p.degree(v)) * i128::from(p.total_distance(v)))
        .sum();
    narrowed(s, "degree distance")
}

/// Sum of all vertex eccentricities.
pub fn eccentricity_total(p: &DistanceProfile) -> i64 {
    let s: i128 = (0..p.n()).map(|v| i128::from(p.ecc(v))).sum();
    narrowed(s, "total eccentricity")
}

/// Every index of one graph, in the order used for CSV rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: i64,
    pub m: i64,
    pub xi_c: i64,
    pub xi_d: i64,
    pub wiener: i64,
    pub zagreb1: i64,
    pub degree_distance: i64,
    pub ecc_total: i64,
    pub diam: i64,
    pub rad: i64,
    pub max_deg: i64,
}

impl IndexReport {
    pub const CSV_HEADER: &'static str =
        "n,m,xi_c,xi_d,wiener,zagreb1,degree_distance,ecc_total,diam,rad,max_deg";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.xi_c,
            self.xi_d,
            self.wiener,
            self.zagreb1,
            self.degree_distance,
            self.ecc_total,
            self.diam,
            self.rad,
            self.max_deg
        )
    }
}

pub fn index_report(g: &Graph) -> IndexReport {
    index_report_with(g, &g.distance_profile())
}

/// Builds a report from a profile that was already computed for `g`.
pub fn index_report_with(g: &Graph, p: &DistanceProfile) -> IndexReport {
    let xi_c = eccentric_connectivity(p);
    let xi_d = eccentric_distance_sum(p);
    debug_assert_eq!(xi_c, eccentric_connectivity_edge_form(g, p));
    debug_assert_eq!(xi_d, eccentric_distance_sum_pair_form(p));
    IndexReport {
        n: g.n() as i64,
        m: g.m() as i64,
        xi_c,
        xi_d,
        wiener: wiener(p),
        zagreb1: zagreb1(p),
        degree_distance: degree_distance(p),
        ecc_total: eccentricity_total(p),
        diam: i64::from(p.diameter()),
        rad: i64::from(p.radius()),
        max_deg: i64::from((0..p.n()).map(|v| p.degree(v)).max().unwrap_or(0)),
    }
}
