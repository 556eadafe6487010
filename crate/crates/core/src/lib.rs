//! Exact computation of eccentricity-based graph indices, the families
//! on which their extremal bounds are tight, the leaf-shifting and
//! path-merging transformations that drive those bounds, exhaustive
//! isomorphism-free enumeration of trees and connected graphs, and a
//! verification suite that checks every bound with exact integer
//! arithmetic over enumerated universes.
//!
//! All index values are exact; intermediate arithmetic widens to 128
//! bits and narrows back with an overflow panic rather than wrapping.

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod transforms;
pub mod verify;

pub use graph::{DistanceProfile, Graph, GraphError};
pub use invariants::{index_report, IndexReport};
pub use verify::{run_suite, SuiteConfig, SuiteSummary, TheoremId, TheoremVerdict};
