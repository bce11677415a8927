//! Graph modifications: edge/vertex deletion, edge/vertex contraction,
//! neighborhood edge clearing, and k-subdivision.
//!
//! Operations that change the vertex set renumber the survivors to
//! 0..n'-1 by ascending original id and return the renumbering map, so
//! downstream certificates and reports are deterministic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which operation was applied, with its arguments. Serializes as
/// `{"kind": "...", "edge": [u,v] | "vertex": v | "k": k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OperationDescriptor {
    DeleteEdge { edge: (usize, usize) },
    DeleteVertex { vertex: usize },
    ContractEdge { edge: (usize, usize) },
    ContractVertex { vertex: usize },
    OdotVertex { vertex: usize },
    Subdivide { k: usize },
}

/// Result of an operation that may shrink the vertex set.
/// `renumbering[old] = Some(new)` for survivors; a removed vertex maps to
/// `None`; for edge contraction both endpoints map to the merged slot.
#[derive(Clone, Debug)]
pub struct OpResult {
    pub graph: Graph,
    pub renumbering: Vec<Option<usize>>,
}

fn require_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::argument(format!("edge ({u}, {v}) not present")));
    }
    Ok(())
}

/// G - e: same vertices, one edge fewer.
pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    require_edge(g, u, v)?;
    let mut out = g.clone();
    out.remove_edge(u, v);
    Ok(out)
}

fn removal_map(n: usize, removed: usize) -> Vec<Option<usize>> {
    (0..n)
        .map(|w| {
            if w == removed {
                None
            } else if w < removed {
                Some(w)
            } else {
                Some(w - 1)
            }
        })
        .collect()
}

/// G - v: drop the vertex and its incident edges, renumber.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<OpResult> {
    g.check_vertex(v)?;
    if g.n() < 2 {
        return Err(Error::argument("cannot delete the last remaining vertex"));
    }
    let map = removal_map(g.n(), v);
    let mut out = Graph::empty(g.n() - 1);
    for (a, b) in g.edges() {
        if let (Some(a2), Some(b2)) = (map[a], map[b]) {
            out.add_edge(a2, b2)?;
        }
    }
    Ok(OpResult {
        graph: out,
        renumbering: map,
    })
}

/// G / e: merge the endpoints of e into one vertex. The merged vertex
/// takes the smaller endpoint's renumbered slot; common neighbors of the
/// endpoints contribute a single edge, keeping the result simple.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<OpResult> {
    require_edge(g, u, v)?;
    let (keep, drop) = if u < v { (u, v) } else { (v, u) };
    let mut map = removal_map(g.n(), drop);
    let merged = map[keep].expect("kept endpoint survives");
    map[drop] = Some(merged);
    let mut out = Graph::empty(g.n() - 1);
    for (a, b) in g.edges() {
        let (a2, b2) = (map[a].unwrap(), map[b].unwrap());
        if a2 != b2 {
            out.add_edge(a2, b2)?;
        }
    }
    Ok(OpResult {
        graph: out,
        renumbering: map,
    })
}

/// G / v: delete v and put a clique on its open neighborhood. Neighbor
/// pairs that were already adjacent stay simply adjacent.
pub fn contract_vertex(g: &Graph, v: usize) -> Result<OpResult> {
    g.check_vertex(v)?;
    if g.n() < 2 {
        return Err(Error::argument("cannot contract the last remaining vertex"));
    }
    let neighbors: Vec<usize> = g.neighbors(v).collect();
    let map = removal_map(g.n(), v);
    let mut out = Graph::empty(g.n() - 1);
    for (a, b) in g.edges() {
        if let (Some(a2), Some(b2)) = (map[a], map[b]) {
            out.add_edge(a2, b2)?;
        }
    }
    for (i, &a) in neighbors.iter().enumerate() {
        for &b in &neighbors[i + 1..] {
            out.add_edge(map[a].unwrap(), map[b].unwrap())?;
        }
    }
    Ok(OpResult {
        graph: out,
        renumbering: map,
    })
}

/// G ⊙ v: remove every edge joining two neighbors of v; v and its
/// incident edges stay.
pub fn odot_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let neighbors: Vec<usize> = g.neighbors(v).collect();
    let mut out = g.clone();
    for (i, &a) in neighbors.iter().enumerate() {
        for &b in &neighbors[i + 1..] {
            out.remove_edge(a, b);
        }
    }
    Ok(out)
}

/// Vertex labels of one subdivided edge: the internal vertex at distance
/// `l` from the smaller endpoint (1 <= l <= k-1) is `internal[l-1]`.
#[derive(Clone, Debug, Serialize)]
pub struct SuperedgeLabel {
    pub edge: (usize, usize),
    pub internal: Vec<usize>,
}

/// Labeling of a k-subdivision: original vertices keep their ids, then
/// internal vertices follow grouped by superedge in lexicographic edge
/// order, by increasing distance from the smaller endpoint.
#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionLabeling {
    pub k: usize,
    pub original: Vec<usize>,
    pub superedges: Vec<SuperedgeLabel>,
}

impl SubdivisionLabeling {
    /// Id of the internal vertex on superedge `{u, v}` at distance `l`
    /// from min(u, v).
    pub fn internal_vertex(&self, u: usize, v: usize, l: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        let se = self.superedges.iter().find(|s| s.edge == key)?;
        if l >= 1 && l <= se.internal.len() {
            Some(se.internal[l - 1])
        } else {
            None
        }
    }
}

/// G^{1/k}: replace every edge by a path of length k. The result has
/// n + (k-1)m vertices and km edges; k = 1 returns the graph unchanged.
pub fn subdivide(g: &Graph, k: usize) -> Result<(Graph, SubdivisionLabeling)> {
    if k < 1 {
        return Err(Error::argument("subdivision requires k >= 1"));
    }
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let total = n + (k - 1) * m;
    let mut out = Graph::empty(total);
    let mut superedges = Vec::with_capacity(m);
    let mut next = n;
    for &(u, v) in &edges {
        let mut internal = Vec::with_capacity(k - 1);
        let mut prev = u;
        for _ in 1..k {
            out.add_edge(prev, next)?;
            internal.push(next);
            prev = next;
            next += 1;
        }
        out.add_edge(prev, v)?;
        superedges.push(SuperedgeLabel {
            edge: (u, v),
            internal,
        });
    }
    Ok((
        out,
        SubdivisionLabeling {
            k,
            original: (0..n).collect(),
            superedges,
        },
    ))
}

/// Outcome of `apply`: the transformed graph, the renumbering map
/// (identity for same-vertex-set operations) and, for subdivisions, the
/// full labeling.
#[derive(Debug)]
pub struct Applied {
    pub graph: Graph,
    pub renumbering: Vec<Option<usize>>,
    pub labeling: Option<SubdivisionLabeling>,
}

/// Dispatches a descriptor against a graph.
pub fn apply(g: &Graph, op: &OperationDescriptor) -> Result<Applied> {
    let identity = |n: usize| (0..n).map(Some).collect::<Vec<_>>();
    match *op {
        OperationDescriptor::DeleteEdge { edge: (u, v) } => Ok(Applied {
            graph: delete_edge(g, u, v)?,
            renumbering: identity(g.n()),
            labeling: None,
        }),
        OperationDescriptor::DeleteVertex { vertex } => {
            let r = delete_vertex(g, vertex)?;
            Ok(Applied {
                graph: r.graph,
                renumbering: r.renumbering,
                labeling: None,
            })
        }
        OperationDescriptor::ContractEdge { edge: (u, v) } => {
            let r = contract_edge(g, u, v)?;
            Ok(Applied {
                graph: r.graph,
                renumbering: r.renumbering,
                labeling: None,
            })
        }
        OperationDescriptor::ContractVertex { vertex } => {
            let r = contract_vertex(g, vertex)?;
            Ok(Applied {
                graph: r.graph,
                renumbering: r.renumbering,
                labeling: None,
            })
        }
        OperationDescriptor::OdotVertex { vertex } => Ok(Applied {
            graph: odot_vertex(g, vertex)?,
            renumbering: identity(g.n()),
            labeling: None,
        }),
        OperationDescriptor::Subdivide { k } => {
            let (graph, labeling) = subdivide(g, k)?;
            Ok(Applied {
                graph,
                renumbering: identity(g.n()),
                labeling: Some(labeling),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, star_on, FamilySpec};

    fn family(spec: FamilySpec) -> Graph {
        make_family(spec).unwrap()
    }

    #[test]
    fn triangle_minus_edge_is_path() {
        let k3 = family(FamilySpec::Complete(3));
        let g = delete_edge(&k3, 0, 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        assert!(delete_edge(&g, 0, 1).is_err());
    }

    #[test]
    fn cycle_minus_edge_is_path() {
        let c4 = family(FamilySpec::Cycle(4));
        for (u, v) in c4.edges() {
            let g = delete_edge(&c4, u, v).unwrap();
            assert_eq!(g.edge_count(), 3);
            assert!(g.is_connected());
            assert_eq!(g.max_degree(), 2);
        }
    }

    #[test]
    fn wheel_minus_hub_is_cycle() {
        let w5 = family(FamilySpec::Wheel(5));
        let r = delete_vertex(&w5, 5).unwrap();
        assert_eq!(r.graph, family(FamilySpec::Cycle(5)));
        assert_eq!(r.renumbering[5], None);
        assert_eq!(r.renumbering[2], Some(2));
    }

    #[test]
    fn complete_minus_vertex() {
        let k5 = family(FamilySpec::Complete(5));
        let r = delete_vertex(&k5, 2).unwrap();
        assert_eq!(r.graph, family(FamilySpec::Complete(4)));
        let k1 = Graph::empty(1);
        assert!(delete_vertex(&k1, 0).is_err());
    }

    #[test]
    fn path_minus_endpoint() {
        let p3 = family(FamilySpec::Path(3));
        let r = delete_vertex(&p3, 2).unwrap();
        assert_eq!(r.graph, family(FamilySpec::Path(2)));
    }

    #[test]
    fn contract_cycle_edge_gives_triangle() {
        let c4 = family(FamilySpec::Cycle(4));
        for (u, v) in c4.edges() {
            let r = contract_edge(&c4, u, v).unwrap();
            assert_eq!(r.graph, family(FamilySpec::Complete(3)), "edge ({u},{v})");
            assert_eq!(r.renumbering[u], r.renumbering[v]);
        }
    }

    #[test]
    fn contract_triangle_edge_collapses_common_neighbor() {
        let k3 = family(FamilySpec::Complete(3));
        let r = contract_edge(&k3, 0, 1).unwrap();
        assert_eq!(r.graph, family(FamilySpec::Complete(2)));
    }

    #[test]
    fn contract_path_end_edge() {
        let p3 = family(FamilySpec::Path(3));
        let r = contract_edge(&p3, 0, 1).unwrap();
        assert_eq!(r.graph, family(FamilySpec::Path(2)));
    }

    #[test]
    fn contract_edge_count_formula() {
        // |E(G/e)| = |E| - 1 - |N(u) ∩ N(v)|
        for g in crate::enumerate::enumerate_connected_graphs(5)
            .unwrap()
            .step_by(17)
        {
            for (u, v) in g.edges() {
                let common = g.neighbors(u).filter(|&w| g.has_edge(v, w)).count();
                let r = contract_edge(&g, u, v).unwrap();
                assert_eq!(r.graph.edge_count(), g.edge_count() - 1 - common);
            }
        }
    }

    #[test]
    fn vertex_contraction_examples() {
        let c4 = family(FamilySpec::Cycle(4));
        let r = contract_vertex(&c4, 0).unwrap();
        assert_eq!(r.graph, family(FamilySpec::Complete(3)));

        let c5 = family(FamilySpec::Cycle(5));
        let r = contract_vertex(&c5, 0).unwrap();
        assert_eq!(r.graph.n(), 4);
        assert_eq!(r.graph.edge_count(), 4);
        assert!(r.graph.vertices().all(|v| r.graph.degree(v) == 2));

        let star = family(FamilySpec::Star(3));
        let r = contract_vertex(&star, 0).unwrap();
        assert_eq!(r.graph, family(FamilySpec::Complete(3)));
    }

    #[test]
    fn vertex_contraction_edge_count_formula() {
        // |E(G/v)| = |E| - deg(v) + (non-adjacent pairs inside N(v))
        for g in crate::enumerate::enumerate_connected_graphs(5)
            .unwrap()
            .step_by(13)
        {
            for v in g.vertices() {
                if g.n() < 2 {
                    continue;
                }
                let nbrs: Vec<usize> = g.neighbors(v).collect();
                let mut new_pairs = 0;
                for (i, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[i + 1..] {
                        if !g.has_edge(a, b) {
                            new_pairs += 1;
                        }
                    }
                }
                let r = contract_vertex(&g, v).unwrap();
                assert_eq!(
                    r.graph.edge_count(),
                    g.edge_count() - g.degree(v) + new_pairs
                );
            }
        }
    }

    #[test]
    fn odot_on_complete_graph_gives_star() {
        for n in 3..=6 {
            let kn = family(FamilySpec::Complete(n));
            let g = odot_vertex(&kn, 0).unwrap();
            // star on n vertices centered at 0
            let expect = star_on(n).unwrap();
            assert_eq!(g, expect);
        }
    }

    #[test]
    fn odot_fixed_point_on_cycle() {
        let c5 = family(FamilySpec::Cycle(5));
        for v in c5.vertices() {
            assert_eq!(odot_vertex(&c5, v).unwrap(), c5);
        }
    }

    #[test]
    fn odot_on_k4_hub() {
        // W_3 = K_4; clearing the hub's neighborhood leaves K_{1,3}
        let w3 = family(FamilySpec::Wheel(3));
        let g = odot_vertex(&w3, 3).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(3), 3);
    }

    #[test]
    fn odot_preserves_center_degree_and_never_raises_any() {
        for g in crate::enumerate::enumerate_connected_graphs(5)
            .unwrap()
            .step_by(11)
        {
            for v in g.vertices() {
                let h = odot_vertex(&g, v).unwrap();
                assert_eq!(h.degree(v), g.degree(v));
                for w in g.vertices() {
                    assert!(h.degree(w) <= g.degree(w));
                }
            }
        }
    }

    #[test]
    fn subdivide_triangle_once_gives_hexagon() {
        let k3 = family(FamilySpec::Complete(3));
        let (g, _) = subdivide(&k3, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_connected());
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn subdivide_counts_and_identity() {
        let star = family(FamilySpec::Star(3));
        let (g, lab) = subdivide(&star, 3).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(lab.superedges.len(), 3);

        let c5 = family(FamilySpec::Cycle(5));
        let (same, _) = subdivide(&c5, 1).unwrap();
        assert_eq!(same, c5);

        assert!(subdivide(&c5, 0).is_err());
    }

    #[test]
    fn subdivision_labeling_adjacency() {
        // internal vertex x_l is adjacent exactly to x_{l-1} and x_{l+1}
        // of its superedge, with the originals at l = 0 and l = k
        let p2 = family(FamilySpec::Path(2));
        let (g, lab) = subdivide(&p2, 4).unwrap();
        let x1 = lab.internal_vertex(0, 1, 1).unwrap();
        let x2 = lab.internal_vertex(0, 1, 2).unwrap();
        let x3 = lab.internal_vertex(0, 1, 3).unwrap();
        assert!(g.has_edge(0, x1) && g.has_edge(x1, x2));
        assert!(g.has_edge(x2, x3) && g.has_edge(x3, 1));
        assert!(!g.has_edge(0, x2) && !g.has_edge(x1, x3));
        assert_eq!(lab.internal_vertex(0, 1, 4), None);
    }

    #[test]
    fn descriptor_serialization() {
        let d = OperationDescriptor::ContractEdge { edge: (0, 1) };
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"kind":"contract_edge","edge":[0,1]}"#
        );
        let d = OperationDescriptor::Subdivide { k: 3 };
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"kind":"subdivide","k":3}"#
        );
        let d = OperationDescriptor::OdotVertex { vertex: 2 };
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"kind":"odot_vertex","vertex":2}"#
        );
    }
}
