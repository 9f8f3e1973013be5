//! Exact per-vertex orbit counts for all connected patterns on up to five
//! vertices (73 vertex orbits, non-induced and induced), plus the edge-orbit
//! counts of 4-vertex patterns.
//!
//! The fast path computes counts from closed-form identities over enumerated
//! small structures (wedges, triangles, 4-cycles, 4-cliques, diamonds,
//! oriented paths) instead of enumerating 5-vertex subgraphs. A brute-force
//! counter over a pinned pattern catalog serves as the ground truth in tests.

pub mod ccd;
pub mod enumerate;
pub mod fixtures;
pub mod graph;
pub mod orbit4;
pub mod orbit5;
pub mod patterns;
pub mod transform;

pub use graph::{build_graph, build_oriented, parse_edge_list, Graph, OrientedGraph};

/// Binomial coefficient helpers on signed accumulators; negative or
/// undersized arguments give zero.
#[inline]
pub fn choose2(x: i64) -> i64 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

#[inline]
pub fn choose3(x: i64) -> i64 {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

#[inline]
pub fn choose4(x: i64) -> i64 {
    if x < 4 {
        0
    } else {
        x * (x - 1) * (x - 2) * (x - 3) / 24
    }
}
