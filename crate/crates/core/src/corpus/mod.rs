//! Graph sources: seeded generators, named fixtures and text formats.

mod edge_list;
mod generate;
mod graph6;
mod named;

use thiserror::Error;

use crate::graph::GraphError;

pub use edge_list::{emit_edge_list, parse_edge_list};
pub use generate::{
    connected_gnp, gen_gnp, gen_permuted_pair, random_permutation, GraphPair, Provenance, Seed,
};
pub use graph6::{emit_graph6, parse_graph6};
pub use named::{named_graph, NAMED_FIXTURES};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorpusError {
    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("generator needs at least one vertex")]
    NoVertices,
    #[error("no connected G({n}, {p}) sample after {attempts} attempts")]
    NoConnectedSample { n: usize, p: f64, attempts: usize },
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
