//! Level neighborhoods, auxiliary digraphs and vertex characteristics.
//!
//! Rooting a connected graph at `v` splits its vertices into lines by
//! shortest-path distance from `v`. Each edge then becomes either one arc
//! pointing from the lower line to the next, or two opposite arcs when both
//! endpoints share a line. A vertex is positioned by the sorted line numbers
//! of its arc sources (`input`) and arc targets (`output`).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

pub type Level = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PositioningError {
    #[error("unknown root vertex {0}")]
    UnknownRoot(VertexId),
    #[error("graph is disconnected: root {root} reaches {reached} of {n} vertices")]
    Disconnected {
        root: VertexId,
        reached: usize,
        n: usize,
    },
}

/// Vertices grouped by BFS distance from a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    root: VertexId,
    levels: Vec<Vec<VertexId>>,
    level_of: BTreeMap<VertexId, Level>,
}

impl LevelDecomposition {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// `levels()[k]` holds the ids at distance `k`, ascending.
    pub fn levels(&self) -> &[Vec<VertexId>] {
        &self.levels
    }

    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn level_of(&self, v: VertexId) -> Option<Level> {
        self.level_of.get(&v).copied()
    }
}

/// BFS distance classes from `root`. Fails unless every vertex is reachable.
pub fn compute_levels(g: &Graph, root: VertexId) -> Result<LevelDecomposition, PositioningError> {
    if !g.contains(root) {
        return Err(PositioningError::UnknownRoot(root));
    }
    let mut level_of = BTreeMap::from([(root, 0)]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let next = level_of[&v] + 1;
        for &u in g.neighbors(v).expect("reachable vertex exists") {
            level_of.entry(u).or_insert_with(|| {
                queue.push_back(u);
                next
            });
        }
    }
    if level_of.len() != g.vertex_count() {
        return Err(PositioningError::Disconnected {
            root,
            reached: level_of.len(),
            n: g.vertex_count(),
        });
    }
    let depth = level_of.values().max().map_or(0, |&d| d as usize + 1);
    let mut levels = vec![Vec::new(); depth];
    for (&v, &k) in &level_of {
        levels[k as usize].push(v);
    }
    Ok(LevelDecomposition {
        root,
        levels,
        level_of,
    })
}

/// Input and output line multisets of one vertex, both nondecreasing.
///
/// The derived ordering compares `input` first, then `output`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Characteristic {
    pub input: Vec<Level>,
    pub output: Vec<Level>,
}

impl Characteristic {
    fn from_counts(level: Level, below: usize, same: usize, above: usize) -> Self {
        let mut input = Vec::with_capacity(below + same);
        if level > 0 {
            input.extend(std::iter::repeat_n(level - 1, below));
        }
        input.extend(std::iter::repeat_n(level, same));
        let mut output = Vec::with_capacity(same + above);
        output.extend(std::iter::repeat_n(level, same));
        output.extend(std::iter::repeat_n(level + 1, above));
        Self { input, output }
    }
}

/// Formats a level list as `(a,b,c)`, or `()` when empty.
pub fn format_levels(levels: &[Level]) -> String {
    let inner: Vec<String> = levels.iter().map(Level::to_string).collect();
    format!("({})", inner.join(","))
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I={} O={}",
            format_levels(&self.input),
            format_levels(&self.output)
        )
    }
}

/// Per level, the sorted multiset of characteristics found there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelProfile {
    levels: Vec<Vec<Characteristic>>,
}

impl LevelProfile {
    pub fn levels(&self) -> &[Vec<Characteristic>] {
        &self.levels
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }
}

/// The layered digraph spawned by a root vertex.
#[derive(Debug, Clone)]
pub struct AuxiliaryDigraph {
    decomposition: LevelDecomposition,
    arcs: Vec<(VertexId, VertexId)>,
    characteristics: BTreeMap<VertexId, Characteristic>,
}

impl AuxiliaryDigraph {
    pub fn build(g: &Graph, root: VertexId) -> Result<Self, PositioningError> {
        let decomposition = compute_levels(g, root)?;
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        for (a, b) in g.edges() {
            let la = decomposition.level_of[&a];
            let lb = decomposition.level_of[&b];
            match la.cmp(&lb) {
                std::cmp::Ordering::Less => arcs.push((a, b)),
                std::cmp::Ordering::Greater => arcs.push((b, a)),
                std::cmp::Ordering::Equal => {
                    arcs.push((a, b));
                    arcs.push((b, a));
                }
            }
        }
        arcs.sort_unstable();
        let mut digraph = Self {
            decomposition,
            arcs,
            characteristics: BTreeMap::new(),
        };
        digraph.characteristics = vertex_characteristics(&digraph);
        Ok(digraph)
    }

    pub fn root(&self) -> VertexId {
        self.decomposition.root
    }

    pub fn decomposition(&self) -> &LevelDecomposition {
        &self.decomposition
    }

    /// Arcs sorted by `(source, target)`.
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn characteristics(&self) -> &BTreeMap<VertexId, Characteristic> {
        &self.characteristics
    }

    pub fn characteristic(&self, v: VertexId) -> Option<&Characteristic> {
        self.characteristics.get(&v)
    }

    pub fn level_profile(&self) -> LevelProfile {
        let levels = self
            .decomposition
            .levels
            .iter()
            .map(|line| {
                let mut chars: Vec<Characteristic> = line
                    .iter()
                    .map(|v| self.characteristics[v].clone())
                    .collect();
                chars.sort_unstable();
                chars
            })
            .collect();
        LevelProfile { levels }
    }

    /// Vertices whose characteristic occurs nowhere else in this digraph.
    pub fn unique_vertices(&self) -> BTreeSet<VertexId> {
        let mut tally: BTreeMap<&Characteristic, Vec<VertexId>> = BTreeMap::new();
        for (&v, c) in &self.characteristics {
            tally.entry(c).or_default().push(v);
        }
        tally
            .into_values()
            .filter(|vs| vs.len() == 1)
            .map(|vs| vs[0])
            .collect()
    }
}

/// Recomputes every vertex characteristic from the arcs alone.
pub fn vertex_characteristics(d: &AuxiliaryDigraph) -> BTreeMap<VertexId, Characteristic> {
    let level = |v: &VertexId| d.decomposition.level_of[v];
    let mut out: BTreeMap<VertexId, Characteristic> = d
        .decomposition
        .level_of
        .keys()
        .map(|&v| (v, Characteristic::default()))
        .collect();
    for (src, dst) in &d.arcs {
        out.get_mut(dst).expect("arc target").input.push(level(src));
        out.get_mut(src).expect("arc source").output.push(level(dst));
    }
    for c in out.values_mut() {
        c.input.sort_unstable();
        c.output.sort_unstable();
    }
    out
}

/// Same level counts, and equal characteristic multisets level by level.
pub fn positional_equivalence(a: &AuxiliaryDigraph, b: &AuxiliaryDigraph) -> bool {
    a.decomposition.level_count() == b.decomposition.level_count()
        && a.level_profile() == b.level_profile()
}

/// Index-based adjacency used by the decision loop, which roots the same
/// graph at many candidate vertices in a row.
#[derive(Debug, Clone)]
pub struct DenseGraph {
    ids: Vec<VertexId>,
    adjacency: Vec<Vec<u32>>,
}

/// Distance classes over a [`DenseGraph`], by vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseLevels {
    level_of: Vec<Level>,
    sizes: Vec<usize>,
}

impl DenseLevels {
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

impl DenseGraph {
    pub fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: &VertexId| ids.binary_search(v).expect("neighbor is a vertex") as u32;
        let adjacency = ids
            .iter()
            .map(|&v| g.neighbors(v).expect("vertex").iter().map(index).collect())
            .collect();
        Self { ids, adjacency }
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn degree_at(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    /// BFS from the vertex at `index`; `None` when some vertex is unreachable.
    pub fn levels_from(&self, index: usize) -> Option<DenseLevels> {
        let n = self.ids.len();
        let mut level_of = vec![Level::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        let mut sizes = vec![1];
        level_of[index] = 0;
        queue.push_back(index);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            let next = level_of[v] + 1;
            for &u in &self.adjacency[v] {
                let u = u as usize;
                if level_of[u] == Level::MAX {
                    level_of[u] = next;
                    if sizes.len() <= next as usize {
                        sizes.push(0);
                    }
                    sizes[next as usize] += 1;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        (reached == n).then_some(DenseLevels { level_of, sizes })
    }

    /// Level profile computed by counting neighbors per line, without arcs.
    pub fn profile(&self, levels: &DenseLevels) -> LevelProfile {
        let mut out: Vec<Vec<Characteristic>> = levels
            .sizes
            .iter()
            .map(|&s| Vec::with_capacity(s))
            .collect();
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            let k = levels.level_of[v];
            let (mut below, mut same, mut above) = (0, 0, 0);
            for &u in nbrs {
                match levels.level_of[u as usize] {
                    l if l < k => below += 1,
                    l if l == k => same += 1,
                    _ => above += 1,
                }
            }
            out[k as usize].push(Characteristic::from_counts(k, below, same, above));
        }
        for line in &mut out {
            line.sort_unstable();
        }
        LevelProfile { levels: out }
    }

    pub fn profile_from(&self, index: usize) -> Option<LevelProfile> {
        self.levels_from(index).map(|l| self.profile(&l))
    }
}
