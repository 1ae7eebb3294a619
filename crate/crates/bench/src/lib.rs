//! Shared fixtures for the benchmarks.

use coc_core::graphs::{add_cross_edge, clique_union, join_clique};
use coc_core::{Graph, Partition};

/// `K_{s-1}` joined to the disjoint cliques of `parts`.
pub fn joined(s: usize, parts: &str) -> Graph {
    let p: Partition = parts.parse().expect("valid partition");
    join_clique(s - 1, &p).expect("small graph")
}

/// Disjoint cliques of `parts` with one edge between the first two.
pub fn bridged(parts: &str) -> Graph {
    let p: Partition = parts.parse().expect("valid partition");
    let h = clique_union(&p).expect("small graph");
    add_cross_edge(&h, 0, 1).expect("two components")
}
