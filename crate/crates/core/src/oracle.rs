//! Exact isomorphism decisions used as ground truth.
//!
//! [`exact_isomorphism`] is a pruned backtracking search.
//! [`exhaustive_isomorphism`] tries every bijection and exists only to
//! cross-check the backtracker on small graphs.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, Permutation, VertexId};

/// Largest vertex count accepted by [`exhaustive_isomorphism`].
pub const EXHAUSTIVE_MAX: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{n} vertices is too many for exhaustive enumeration (max {EXHAUSTIVE_MAX})")]
    TooLarge { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub isomorphic: bool,
    /// Present iff `isomorphic`. Maps left ids to right ids.
    pub witness: Option<Permutation>,
}

impl OracleResult {
    fn from_witness(witness: Option<Permutation>) -> Self {
        Self {
            isomorphic: witness.is_some(),
            witness,
        }
    }
}

struct Matrix {
    ids: Vec<VertexId>,
    n: usize,
    bits: Vec<bool>,
    degree: Vec<usize>,
}

impl Matrix {
    fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let n = ids.len();
        let mut bits = vec![false; n * n];
        for (a, b) in g.edges() {
            let i = ids.binary_search(&a).expect("vertex");
            let j = ids.binary_search(&b).expect("vertex");
            bits[i * n + j] = true;
            bits[j * n + i] = true;
        }
        let degree = (0..n)
            .map(|i| bits[i * n..(i + 1) * n].iter().filter(|&&b| b).count())
            .collect();
        Self {
            ids,
            n,
            bits,
            degree,
        }
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }
}

fn sizes_match(g: &Graph, h: &Graph) -> Result<(), OracleError> {
    if g.vertex_count() != h.vertex_count() {
        return Err(OracleError::SizeMismatch {
            left: g.vertex_count(),
            right: h.vertex_count(),
        });
    }
    Ok(())
}

/// Exact decision by backtracking with degree and adjacency pruning.
pub fn exact_isomorphism(g: &Graph, h: &Graph) -> Result<OracleResult, OracleError> {
    sizes_match(g, h)?;
    if g.edge_count() != h.edge_count() || g.degree_vector() != h.degree_vector() {
        return Ok(OracleResult::from_witness(None));
    }
    let left = Matrix::new(g);
    let right = Matrix::new(h);
    let order = search_order(&left);
    let mut candidates: Vec<usize> = (0..right.n).collect();
    candidates.sort_by_key(|&j| (right.degree[j], right.ids[j]));

    let mut search = Search {
        left: &left,
        right: &right,
        order: &order,
        candidates: &candidates,
        assigned: vec![usize::MAX; left.n],
        used: vec![false; right.n],
    };
    let witness = search.extend(0).then(|| {
        Permutation::from_pairs(
            (0..left.n).map(|i| (left.ids[i], right.ids[search.assigned[i]])),
        )
        .expect("search assigns injectively")
    });
    Ok(OracleResult::from_witness(witness))
}

/// Left vertices ordered so each one has as many already ordered neighbors
/// as possible; ties go to higher degree, then lower id.
fn search_order(m: &Matrix) -> Vec<usize> {
    let mut order = Vec::with_capacity(m.n);
    let mut placed = vec![false; m.n];
    let mut links = vec![0usize; m.n];
    for _ in 0..m.n {
        let next = (0..m.n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| (links[i], m.degree[i], std::cmp::Reverse(i)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for (j, count) in links.iter_mut().enumerate() {
            if m.adjacent(next, j) {
                *count += 1;
            }
        }
    }
    order
}

struct Search<'a> {
    left: &'a Matrix,
    right: &'a Matrix,
    order: &'a [usize],
    candidates: &'a [usize],
    assigned: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for &c in self.candidates {
            if self.used[c] || self.right.degree[c] != self.left.degree[v] || !self.consistent(depth, v, c) {
                continue;
            }
            self.assigned[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.assigned[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, c: usize) -> bool {
        self.order[..depth].iter().all(|&w| {
            self.left.adjacent(v, w) == self.right.adjacent(c, self.assigned[w])
        })
    }
}

/// Exact decision by trying all `n!` bijections. Limited to small graphs.
pub fn exhaustive_isomorphism(g: &Graph, h: &Graph) -> Result<OracleResult, OracleError> {
    sizes_match(g, h)?;
    let n = g.vertex_count();
    if n > EXHAUSTIVE_MAX {
        return Err(OracleError::TooLarge { n });
    }
    let left: Vec<VertexId> = g.vertices().collect();
    let right: Vec<VertexId> = h.vertices().collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(a, b)| {
            (
                left.binary_search(&a).expect("vertex"),
                left.binary_search(&b).expect("vertex"),
            )
        })
        .collect();
    let fits = |images: &[VertexId]| {
        g.edge_count() == h.edge_count()
            && edges.iter().all(|&(a, b)| h.has_edge(images[a], images[b]))
    };
    let witness = right
        .iter()
        .copied()
        .permutations(n)
        .find(|images| fits(images))
        .map(|images| {
            Permutation::from_pairs(left.iter().copied().zip(images)).expect("bijection")
        });
    Ok(OracleResult::from_witness(witness))
}
