//! The matched-vertex removal loop.
//!
//! Each round roots the lowest surviving vertex `v` of the left graph, then
//! scans the right graph's surviving vertices in ascending order for the
//! first `u` whose auxiliary digraph is positionally equivalent. Both are
//! deleted and the loop repeats until the graphs are exhausted. A round with
//! no match ends the run with a rejection.
//!
//! The verdict is a heuristic claim. A complete run pairs every vertex, but
//! the pairing is not guaranteed to be an isomorphism; see
//! [`verify_mapping`].

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Permutation, VertexId};
use crate::positioning::{DenseGraph, DenseLevels, LevelProfile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeuristicError {
    #[error("{side} input graph is empty")]
    Empty { side: Side },
    #[error("{side} input graph is disconnected")]
    Disconnected { side: Side },
    #[error("removal trace is incomplete: {rounds} of {n} rounds")]
    IncompleteTrace { rounds: usize, n: usize },
    #[error(transparent)]
    Mapping(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    HeuristicIsomorphic,
    HeuristicNotIsomorphic,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::HeuristicIsomorphic => "HEURISTIC_ISOMORPHIC",
            Outcome::HeuristicNotIsomorphic => "HEURISTIC_NOT_ISOMORPHIC",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a rejection happened. Rounds are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureStage {
    /// Vertex count, edge count or degree vector differ.
    Precheck,
    /// No right-hand vertex matched the pivot.
    NoMatch { round: usize, pivot: VertexId },
    /// A removal left one of the graphs disconnected before this round.
    DisconnectedIntermediate { round: usize },
}

impl fmt::Display for FailureStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureStage::Precheck => f.write_str("precheck"),
            FailureStage::NoMatch { round, pivot } => {
                write!(f, "round {round}: no match for pivot id {pivot}")
            }
            FailureStage::DisconnectedIntermediate { round } => {
                write!(f, "disconnected-intermediate at round {round}")
            }
        }
    }
}

/// Decision outcome; a failure stage is present exactly on rejection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    failure: Option<FailureStage>,
}

impl Verdict {
    pub fn isomorphic() -> Self {
        Self { failure: None }
    }

    pub fn rejected(stage: FailureStage) -> Self {
        Self {
            failure: Some(stage),
        }
    }

    pub fn outcome(&self) -> Outcome {
        match self.failure {
            None => Outcome::HeuristicIsomorphic,
            Some(_) => Outcome::HeuristicNotIsomorphic,
        }
    }

    pub fn failure_stage(&self) -> Option<FailureStage> {
        self.failure
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failure {
            None => write!(f, "{}", self.outcome()),
            Some(stage) => write!(f, "{} ({stage})", self.outcome()),
        }
    }
}

/// Pairs removed so far, in round order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RemovalTrace {
    rounds: Vec<(VertexId, VertexId)>,
    vertex_count: usize,
}

impl RemovalTrace {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            rounds: Vec::with_capacity(vertex_count),
            vertex_count,
        }
    }

    pub fn rounds(&self) -> &[(VertexId, VertexId)] {
        &self.rounds
    }

    /// Vertex count of the inputs the trace was recorded on.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_complete(&self) -> bool {
        self.rounds.len() == self.vertex_count
    }
}

/// A complete trace read as a left-to-right vertex correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateMapping(Permutation);

impl CandidateMapping {
    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub trace: RemovalTrace,
}

fn check_input(g: &Graph, side: Side) -> Result<(), HeuristicError> {
    match g.is_connected() {
        Err(_) => Err(HeuristicError::Empty { side }),
        Ok(false) => Err(HeuristicError::Disconnected { side }),
        Ok(true) => Ok(()),
    }
}

/// Equal vertex counts, edge counts and degree vectors.
pub fn precheck(g: &Graph, h: &Graph) -> Result<bool, HeuristicError> {
    check_input(g, Side::Left)?;
    check_input(h, Side::Right)?;
    Ok(g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && g.degree_vector() == h.degree_vector())
}

/// Runs the removal loop on two connected graphs.
pub fn decide_isomorphism(g: &Graph, h: &Graph) -> Result<Decision, HeuristicError> {
    let mut trace = RemovalTrace::new(g.vertex_count());
    if !precheck(g, h)? {
        return Ok(Decision {
            verdict: Verdict::rejected(FailureStage::Precheck),
            trace,
        });
    }
    let mut left = g.clone();
    let mut right = h.clone();
    let mut round = 1;
    while !left.is_empty() {
        match match_round(&left, &right) {
            RoundResult::Matched(v, u) => {
                trace.rounds.push((v, u));
                left = left.remove_vertex(v)?;
                right = right.remove_vertex(u)?;
            }
            RoundResult::NoMatch(pivot) => {
                return Ok(Decision {
                    verdict: Verdict::rejected(FailureStage::NoMatch { round, pivot }),
                    trace,
                });
            }
            RoundResult::Disconnected => {
                return Ok(Decision {
                    verdict: Verdict::rejected(FailureStage::DisconnectedIntermediate { round }),
                    trace,
                });
            }
        }
        round += 1;
    }
    Ok(Decision {
        verdict: Verdict::isomorphic(),
        trace,
    })
}

enum RoundResult {
    Matched(VertexId, VertexId),
    NoMatch(VertexId),
    Disconnected,
}

fn match_round(left: &Graph, right: &Graph) -> RoundResult {
    let q = DenseGraph::new(left);
    let s = DenseGraph::new(right);
    let pivot = q.ids()[0];
    let Some(pivot_levels) = q.levels_from(0) else {
        return RoundResult::Disconnected;
    };
    // Any BFS on the right graph tells whether it is connected.
    if s.levels_from(0).is_none() {
        return RoundResult::Disconnected;
    }
    let pivot_profile = q.profile(&pivot_levels);
    let pivot_degree = q.degree_at(0);
    for (idx, &u) in s.ids().iter().enumerate() {
        // Level 1 is the neighborhood, so degree and line sizes must agree
        // before the full profile is worth computing.
        if s.degree_at(idx) != pivot_degree {
            continue;
        }
        let levels = s.levels_from(idx).expect("right graph is connected");
        if candidate_matches(&s, &levels, &pivot_levels, &pivot_profile) {
            return RoundResult::Matched(pivot, u);
        }
    }
    RoundResult::NoMatch(pivot)
}

fn candidate_matches(
    s: &DenseGraph,
    levels: &DenseLevels,
    pivot_levels: &DenseLevels,
    pivot_profile: &LevelProfile,
) -> bool {
    levels.sizes() == pivot_levels.sizes() && s.profile(levels) == *pivot_profile
}

/// Reads a complete trace as a vertex correspondence.
pub fn extract_candidate_mapping(t: &RemovalTrace) -> Result<CandidateMapping, HeuristicError> {
    if !t.is_complete() {
        return Err(HeuristicError::IncompleteTrace {
            rounds: t.rounds.len(),
            n: t.vertex_count,
        });
    }
    Ok(CandidateMapping(Permutation::from_pairs(
        t.rounds.iter().copied(),
    )?))
}

/// True iff `m` carries every edge of `g` onto an edge of `h` and the edge
/// counts agree, which together make `m` an isomorphism.
pub fn verify_mapping(g: &Graph, h: &Graph, m: &Permutation) -> Result<bool, HeuristicError> {
    if g.vertex_count() != h.vertex_count() || m.len() != g.vertex_count() {
        return Err(GraphError::NotABijection("mapping size differs from the graphs".into()).into());
    }
    if let Some(v) = g.vertices().find(|&v| m.get(v).is_none()) {
        return Err(GraphError::NotABijection(format!("vertex {v} is unmapped")).into());
    }
    if let Some(&u) = m.codomain().iter().find(|&&u| !h.contains(u)) {
        return Err(GraphError::NotABijection(format!("image {u} is not a vertex")).into());
    }
    let mapped = |v: VertexId| m.get(v).expect("total on V_G");
    Ok(g.edge_count() == h.edge_count()
        && g.edges().all(|(a, b)| h.has_edge(mapped(a), mapped(b))))
}
