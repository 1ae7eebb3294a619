//! Degree-sequence conditions for component order connectivity.
//!
//! A graph is k-component order s-connected when at least `s` vertices
//! (or edges) must be removed before every remaining component has fewer
//! than `k` vertices. This crate enumerates the sink sequences that bound
//! the weakest degree conditions forcing the property, derives the
//! matching Chvátal-type conditions, and checks them against exact
//! exhaustive oracles on small graphs.

pub mod conditions;
pub mod corollaries;

pub mod degree_seq;
pub mod error;
pub mod graphs;
pub mod partitions;
pub mod property;
pub mod sinks;
pub mod validate;

pub use conditions::{
    best_monotone, blocking_condition, declare, satisfies, Atom, ChvatalCondition, MonotoneTheorem, Verdict,
};
pub use degree_seq::{
    format_sequence, is_graphical, majorizes, parse_sequence, DegreeSequence, FormatStyle, GraphicalityViolation,
};
pub use error::{Error, Result};
pub use graphs::{kappa_c, lambda_c, ConnectivityResult, Graph, Witness};
pub use partitions::{enumerate_sink_partitions, reduce_partition, transformation_path, MoveStep, Partition};
pub use property::{Property, Variant};
pub use sinks::{sinks_for, Provenance, SinkRecord};
