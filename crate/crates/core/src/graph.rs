//! Undirected simple graphs with stable vertex identifiers.
//!
//! Vertex ids survive deletion unchanged, so a sequence of removals can
//! always be reported in terms of the ids of the original graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge on vertex {0}")]
    Loop(VertexId),
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    OutOfRange { id: VertexId, n: usize },
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("mapping is not a bijection: {0}")]
    NotABijection(String),
    #[error("operation requires a nonempty graph")]
    Empty,
}

/// Undirected simple graph.
///
/// Adjacency is kept as ordered sets so iteration order, and therefore every
/// derived report, is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Duplicate pairs collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let ids = (0..n).map(|v| v as VertexId);
        let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> =
            ids.map(|v| (v, BTreeSet::new())).collect();
        for (a, b) in edges {
            for id in [a, b] {
                if id as usize >= n {
                    return Err(GraphError::OutOfRange { id, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            adjacency.get_mut(&a).expect("checked").insert(b);
            adjacency.get_mut(&b).expect("checked").insert(a);
        }
        Ok(Self { adjacency })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn neighbors(&self, v: VertexId) -> Option<&BTreeSet<VertexId>> {
        self.adjacency.get(&v)
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.adjacency.get(&v).map(BTreeSet::len)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency.get(&a).is_some_and(|n| n.contains(&b))
    }

    /// Each edge once, as `(low, high)`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&v, nbrs)| nbrs.range(v + 1..).map(move |&u| (v, u)))
    }

    /// Sorted multiset of vertex degrees.
    pub fn degree_vector(&self) -> DegreeVector {
        let mut degrees: Vec<usize> = self.adjacency.values().map(BTreeSet::len).collect();
        degrees.sort_unstable();
        DegreeVector(degrees)
    }

    /// Induced subgraph on every vertex except `v`. Surviving ids are unchanged.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Self, GraphError> {
        let mut adjacency = self.adjacency.clone();
        let nbrs = adjacency.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        for u in nbrs {
            adjacency.get_mut(&u).expect("symmetric adjacency").remove(&v);
        }
        Ok(Self { adjacency })
    }

    /// Relabels every vertex `v` as `p(v)`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Self, GraphError> {
        if p.len() != self.vertex_count() || self.vertices().any(|v| p.get(v).is_none()) {
            return Err(GraphError::NotABijection(
                "domain differs from the graph's vertex set".into(),
            ));
        }
        let adjacency = self
            .adjacency
            .iter()
            .map(|(&v, nbrs)| (p.map[&v], nbrs.iter().map(|u| p.map[u]).collect()))
            .collect();
        Ok(Self { adjacency })
    }

    /// True iff the graph has exactly one connected component.
    pub fn is_connected(&self) -> Result<bool, GraphError> {
        let start = *self.adjacency.keys().next().ok_or(GraphError::Empty)?;
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[&v] {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        Ok(seen.len() == self.vertex_count())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Nondecreasing list of vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Bijection between two equal-size sets of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: BTreeMap<VertexId, VertexId>,
}

impl Permutation {
    /// Accepts any injective list of pairs; the codomain is the set of images.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut map = BTreeMap::new();
        let mut images = BTreeSet::new();
        for (from, to) in pairs {
            if map.insert(from, to).is_some() {
                return Err(GraphError::NotABijection(format!("{from} mapped twice")));
            }
            if !images.insert(to) {
                return Err(GraphError::NotABijection(format!("{to} hit twice")));
            }
        }
        Ok(Self { map })
    }

    /// `images[i]` is the image of vertex `i`.
    pub fn from_images(images: &[VertexId]) -> Result<Self, GraphError> {
        Self::from_pairs(images.iter().enumerate().map(|(i, &t)| (i as VertexId, t)))
    }

    pub fn identity<I: IntoIterator<Item = VertexId>>(ids: I) -> Self {
        Self {
            map: ids.into_iter().map(|v| (v, v)).collect(),
        }
    }

    pub fn get(&self, v: VertexId) -> Option<VertexId> {
        self.map.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(a, b)| a == b)
    }

    pub fn inverse(&self) -> Self {
        Self {
            map: self.map.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.map.iter().map(|(&a, &b)| (a, b))
    }

    pub fn domain(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.map.keys().copied()
    }

    pub fn codomain(&self) -> BTreeSet<VertexId> {
        self.map.values().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_rejects_loops_and_bad_ids() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::OutOfRange { id: 2, n: 2 })
        );
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g, p3());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.is_connected(), Ok(true));
        let e = g.remove_vertex(0).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.is_connected(), Err(GraphError::Empty));
    }

    #[test]
    fn degree_vectors() {
        assert_eq!(k3().degree_vector().as_slice(), &[2, 2, 2]);
        assert_eq!(p3().degree_vector().as_slice(), &[1, 1, 2]);
    }

    #[test]
    fn remove_keeps_ids() {
        let g = k3().remove_vertex(0).unwrap();
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(k3().remove_vertex(7), Err(GraphError::UnknownVertex(7)));
    }

    #[test]
    fn permutations() {
        let id = Permutation::identity(0..3);
        assert_eq!(k3().apply_permutation(&id).unwrap(), k3());

        let swap = Permutation::from_images(&[2, 1, 0]).unwrap();
        assert_eq!(p3().apply_permutation(&swap).unwrap(), p3());

        let rotate = Permutation::from_images(&[1, 2, 0]).unwrap();
        let r = p3().apply_permutation(&rotate).unwrap();
        assert_eq!(r.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert_eq!(r.apply_permutation(&rotate.inverse()).unwrap(), p3());
    }

    #[test]
    fn permutation_errors() {
        assert!(Permutation::from_pairs([(0, 1), (1, 1)]).is_err());
        assert!(Permutation::from_pairs([(0, 1), (0, 2)]).is_err());
        let short = Permutation::from_images(&[1, 0]).unwrap();
        assert!(k3().apply_permutation(&short).is_err());
        let off = Permutation::from_pairs([(0, 0), (1, 1), (5, 2)]).unwrap();
        assert!(k3().apply_permutation(&off).is_err());
    }

    #[test]
    fn connectivity() {
        assert_eq!(k3().is_connected(), Ok(true));
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.is_connected(), Ok(false));
    }
}
