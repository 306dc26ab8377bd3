//! Graph isomorphism by vertex positioning.
//!
//! A vertex is positioned inside a graph by rooting a layered digraph at it
//! and recording, for every vertex, which lines its arcs come from and go
//! to. Two rootings that agree line by line are treated as matching, and the
//! [`heuristic`] removes matched pairs until the graphs are exhausted. The
//! [`oracle`] module decides isomorphism exactly so the heuristic's verdicts
//! can be checked.

pub mod corpus;
pub mod graph;
pub mod heuristic;
pub mod oracle;
pub mod positioning;

pub use graph::{DegreeVector, Graph, GraphError, Permutation, VertexId};
pub use heuristic::{
    decide_isomorphism, extract_candidate_mapping, precheck, verify_mapping, CandidateMapping,
    Decision, FailureStage, HeuristicError, Outcome, RemovalTrace, Verdict,
};
pub use oracle::{exact_isomorphism, exhaustive_isomorphism, OracleError, OracleResult};
pub use positioning::{
    compute_levels, positional_equivalence, vertex_characteristics, AuxiliaryDigraph,
    Characteristic, LevelDecomposition, LevelProfile,
};
