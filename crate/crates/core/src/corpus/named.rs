use super::CorpusError;
use crate::graph::{Graph, VertexId};

/// Fixed-name fixtures. `path_<n>`, `cycle_<n>` and `complete_<n>` are also
/// accepted for any size.
pub const NAMED_FIXTURES: &[&str] = &[
    "appendix_G",
    "appendix_H",
    "petersen",
    "rook_4x4",
    "shrikhande",
];

/// Octahedron rooted so that `v1` (id 0) and `v4` (id 3) are antipodal and
/// the remaining vertices form the cycle v2, v3, v5, v6.
const APPENDIX_G: &[(VertexId, VertexId)] = &[
    (0, 1), (0, 2), (0, 4), (0, 5),
    (3, 1), (3, 2), (3, 4), (3, 5),
    (1, 2), (2, 4), (4, 5), (5, 1),
];

/// Octahedron with `u1`, `u5` antipodal and the cycle u2, u3, u6, u4.
const APPENDIX_H: &[(VertexId, VertexId)] = &[
    (0, 1), (0, 2), (0, 3), (0, 5),
    (4, 1), (4, 2), (4, 3), (4, 5),
    (1, 2), (2, 5), (5, 3), (3, 1),
];

pub fn named_graph(name: &str) -> Result<Graph, CorpusError> {
    let unknown = || CorpusError::UnknownName(name.to_string());
    let sized = |prefix: &str| {
        name.strip_prefix(prefix)
            .map(|n| n.parse::<usize>().map_err(|_| unknown()))
    };
    if let Some(n) = sized("path_") {
        return path(n?);
    }
    if let Some(n) = sized("cycle_") {
        return cycle(n?).ok_or_else(unknown)?;
    }
    if let Some(n) = sized("complete_") {
        return complete(n?);
    }
    let g = match name {
        "appendix_G" => Graph::new(6, APPENDIX_G.iter().copied())?,
        "appendix_H" => Graph::new(6, APPENDIX_H.iter().copied())?,
        "petersen" => petersen(),
        "rook_4x4" => rook_4x4(),
        "shrikhande" => shrikhande(),
        _ => return Err(unknown()),
    };
    Ok(g)
}

fn path(n: usize) -> Result<Graph, CorpusError> {
    Ok(Graph::new(n, (1..n as VertexId).map(|i| (i - 1, i)))?)
}

fn cycle(n: usize) -> Option<Result<Graph, CorpusError>> {
    (n >= 3).then(|| {
        let n32 = n as VertexId;
        Ok(Graph::new(n, (0..n32).map(|i| (i, (i + 1) % n32)))?)
    })
}

fn complete(n: usize) -> Result<Graph, CorpusError> {
    let n32 = n as VertexId;
    Ok(Graph::new(
        n,
        (0..n32).flat_map(|i| (i + 1..n32).map(move |j| (i, j))),
    )?)
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("valid fixture")
}

/// Vertex `4r + c`; adjacent when sharing a row or a column.
fn rook_4x4() -> Graph {
    let cell = |v: VertexId| (v / 4, v % 4);
    let edges = (0..16).flat_map(|a| (a + 1..16).map(move |b| (a, b))).filter(|&(a, b)| {
        let ((ra, ca), (rb, cb)) = (cell(a), cell(b));
        ra == rb || ca == cb
    });
    Graph::new(16, edges).expect("valid fixture")
}

/// Cayley graph of Z4 x Z4 with connection set ±(0,1), ±(1,0), ±(1,1).
fn shrikhande() -> Graph {
    let cell = |v: VertexId| (v / 4, v % 4);
    let edges = (0..16).flat_map(|a| (a + 1..16).map(move |b| (a, b))).filter(|&(a, b)| {
        let ((ra, ca), (rb, cb)) = (cell(a), cell(b));
        let diff = ((rb + 4 - ra) % 4, (cb + 4 - ca) % 4);
        matches!(diff, (0, 1) | (0, 3) | (1, 0) | (3, 0) | (1, 1) | (3, 3))
    });
    Graph::new(16, edges).expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Degree vector and connectivity of the subgraph induced by the
    /// neighbors of `v`.
    fn neighborhood_shape(g: &Graph, v: VertexId) -> (Vec<usize>, bool) {
        let nbrs = g.neighbors(v).unwrap();
        let sub = g
            .vertices()
            .filter(|u| !nbrs.contains(u))
            .fold(g.clone(), |acc, u| acc.remove_vertex(u).unwrap());
        (sub.degree_vector().as_slice().to_vec(), sub.is_connected().unwrap())
    }

    #[test]
    fn sized_families() {
        assert_eq!(named_graph("complete_3").unwrap().edge_count(), 3);
        assert_eq!(named_graph("path_4").unwrap().edge_count(), 3);
        assert_eq!(named_graph("cycle_5").unwrap().edge_count(), 5);
        assert_eq!(named_graph("path_1").unwrap().vertex_count(), 1);
        assert!(named_graph("cycle_2").is_err());
        assert!(named_graph("path_x").is_err());
        assert!(named_graph("dodecahedron").is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = named_graph("petersen").unwrap();
        assert_eq!(g.degree_vector().as_slice(), &[3; 10]);
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn appendix_graphs_are_octahedra() {
        for name in ["appendix_G", "appendix_H"] {
            let g = named_graph(name).unwrap();
            assert_eq!(g.degree_vector().as_slice(), &[4; 6]);
            assert_eq!(g.is_connected(), Ok(true));
        }
        let g = named_graph("appendix_G").unwrap();
        assert!(!g.has_edge(0, 3) && !g.has_edge(1, 4) && !g.has_edge(2, 5));
        let h = named_graph("appendix_H").unwrap();
        assert!(!h.has_edge(0, 4) && !h.has_edge(1, 5) && !h.has_edge(2, 3));
    }

    #[test]
    fn strongly_regular_pair() {
        let rook = named_graph("rook_4x4").unwrap();
        let shri = named_graph("shrikhande").unwrap();
        for g in [&rook, &shri] {
            assert_eq!(g.degree_vector().as_slice(), &[6; 16]);
            assert_eq!(g.edge_count(), 48);
            // lambda = mu = 2
            for a in g.vertices() {
                for b in g.vertices().filter(|&b| b != a) {
                    let common = g.neighbors(a).unwrap().intersection(g.neighbors(b).unwrap()).count();
                    assert_eq!(common, 2);
                }
            }
        }
        // Every neighborhood is 2-regular on six vertices. In the rook's graph
        // it is two disjoint triangles, in the Shrikhande graph a hexagon.
        for v in 0..16 {
            let (rook_shape, rook_connected) = neighborhood_shape(&rook, v);
            let (shri_shape, shri_connected) = neighborhood_shape(&shri, v);
            assert_eq!(rook_shape, vec![2; 6]);
            assert_eq!(shri_shape, vec![2; 6]);
            assert!(!rook_connected);
            assert!(shri_connected);
        }
    }
}
