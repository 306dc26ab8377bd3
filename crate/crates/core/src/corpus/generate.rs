use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CorpusError;
use crate::graph::{Graph, Permutation, VertexId};

/// Seed for the portable ChaCha8 stream behind every generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Permuted,
    IndependentGnp,
    Named(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Permuted => f.write_str("permuted"),
            Provenance::IndependentGnp => f.write_str("independent-gnp"),
            Provenance::Named(name) => write!(f, "named:{name}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GraphPair {
    pub left: Graph,
    pub right: Graph,
    pub provenance: Provenance,
    /// The relabeling used to build `right`, when there is one.
    pub hidden: Option<Permutation>,
}

fn check_params(n: usize, p: f64) -> Result<(), CorpusError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CorpusError::Probability(p));
    }
    if n == 0 {
        return Err(CorpusError::NoVertices);
    }
    Ok(())
}

fn sample_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n as VertexId {
        for j in i + 1..n as VertexId {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("ids in range, no loops")
}

/// Erdős–Rényi G(n, p); pairs are drawn in lexicographic order.
pub fn gen_gnp(n: usize, p: f64, seed: Seed) -> Result<Graph, CorpusError> {
    check_params(n, p)?;
    Ok(sample_gnp(n, p, &mut seed.rng()))
}

const CONNECTED_ATTEMPTS: usize = 10_000;

/// Draws G(n, p) samples from `rng` until one is connected.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, CorpusError> {
    check_params(n, p)?;
    for _ in 0..CONNECTED_ATTEMPTS {
        let g = sample_gnp(n, p, rng);
        if g.is_connected() == Ok(true) {
            return Ok(g);
        }
    }
    Err(CorpusError::NoConnectedSample {
        n,
        p,
        attempts: CONNECTED_ATTEMPTS,
    })
}

/// Uniform permutation of the vertex set of `g` onto itself.
pub fn random_permutation<R: Rng>(g: &Graph, rng: &mut R) -> Permutation {
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut images = ids.clone();
    images.shuffle(rng);
    Permutation::from_pairs(ids.into_iter().zip(images)).expect("shuffle is a bijection")
}

/// `g` paired with a randomly relabeled copy of itself.
pub fn gen_permuted_pair(g: &Graph, seed: Seed) -> Result<GraphPair, CorpusError> {
    if g.is_empty() {
        return Err(CorpusError::NoVertices);
    }
    let p = random_permutation(g, &mut seed.rng());
    Ok(GraphPair {
        left: g.clone(),
        right: g.apply_permutation(&p)?,
        provenance: Provenance::Permuted,
        hidden: Some(p),
    })
}
