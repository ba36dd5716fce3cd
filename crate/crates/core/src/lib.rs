//! Maximum matchings against pairs of disjoint matchings in small graphs.
//!
//! For a graph `G` the crate computes the maximum matching size `nu`, the
//! largest combined size `lambda` of two disjoint matchings, the largest
//! `mu` of a matching in such an optimal pair, and the minimal path/even
//! cycle decompositions tying them together. On top of that it checks the
//! structure of maximally intersecting triples `(M, H, H')`, recognises
//! skeleton graphs, and runs whole corpora through every check.
//!
//! Everything is exact and exhaustive, so graphs are limited to 128 edges
//! and the enumerations are practical only for small graphs.

pub mod alternating;
pub mod budget;
pub mod corpus;
pub mod edgeset;
pub mod error;
pub mod formats;
pub mod graph;
pub mod matchings;
pub mod pec;
pub mod report;
pub mod skeleton;

pub use budget::Budget;
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use formats::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use graph::{Graph, Vertex};
pub use matchings::{
    max_matching, param_report, DisjointPair, Matching, MatchingTriple, ParamReport, Ratio,
};
pub use skeleton::{
    check_skeleton, find_skeleton_decomposition, generate_k_skeleton, generate_spanner, ViiiReading,
};
