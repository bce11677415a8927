//! Simple undirected graphs on vertices `0..n` plus the named families
//! and structural predicates (connectivity, bridges, cut vertices) used
//! throughout the crate.

use crate::error::{Error, Result};

/// A simple undirected graph: no loops, no parallel edges.
///
/// Stored as a full boolean adjacency matrix; every graph this crate
/// works with is small, and O(1) adjacency tests dominate everything
/// the solvers and the verifiers do.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    fn idx(&self, u: usize, v: usize) -> usize {
        u * self.n + v
    }

    /// Adds the edge `{u, v}`. Idempotent.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::argument(format!("self-loop at vertex {u}")));
        }
        let (i, j) = (self.idx(u, v), self.idx(v, u));
        self.adj[i] = true;
        self.adj[j] = true;
        Ok(())
    }

    /// Removes the edge `{u, v}` if present; returns whether it was there.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u < self.n && v < self.n && u != v && self.adj[self.idx(u, v)] {
            let (i, j) = (self.idx(u, v), self.idx(v, u));
            self.adj[i] = false;
            self.adj[j] = false;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[self.idx(u, v)]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(u, &a)| if a { Some(u) } else { None })
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[self.idx(u, v)] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Lowest-id vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.vertices().find(|&v| self.degree(v) == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        components
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::argument("permutation length mismatch"));
        }
        let mut check = vec![false; self.n];
        for &p in perm {
            if p >= self.n || check[p] {
                return Err(Error::argument("not a permutation"));
            }
            check[p] = true;
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::argument(format!(
                "vertex {v} out of range (graph has {} vertices)",
                self.n
            )))
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The named graph families the theorems quantify over.
///
/// Size conventions: `Path`, `Cycle`, `Complete` take the vertex count;
/// `Star(n)` is K_{1,n} on n+1 vertices (center 0, leaves 1..=n);
/// `Wheel(n)` has rim 0..n-1 in a cycle plus hub `n`, n+1 vertices total.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
            FamilySpec::Wheel(_) => "wheel",
        }
    }

    pub fn param(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Wheel(n) => n,
        }
    }
}

/// Constructs the canonical labeled member of a family.
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            if n < 1 {
                return Err(Error::argument("path requires n >= 1"));
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(Error::argument("cycle requires n >= 3"));
            }
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete(n) => {
            if n < 1 {
                return Err(Error::argument("complete requires n >= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star(n) => {
            if n < 1 {
                return Err(Error::argument("star requires n >= 1 leaves"));
            }
            let edges: Vec<_> = (1..=n).map(|leaf| (0, leaf)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        FamilySpec::Wheel(n) => {
            if n < 3 {
                return Err(Error::argument("wheel requires rim length n >= 3"));
            }
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            for rim in 0..n {
                edges.push((rim, n));
            }
            Graph::from_edges(n + 1, &edges)
        }
    }
}

/// The star on `n` vertices (center plus n-1 leaves), the form the
/// complete-graph edge-clearing identity compares against.
pub fn star_on(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::argument("star_on requires n >= 2 vertices"));
    }
    make_family(FamilySpec::Star(n - 1))
}

/// Connectivity, bridges, cut vertices and the degree sequence of a graph.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructureReport {
    pub connected: bool,
    pub bridges: Vec<(usize, usize)>,
    pub cut_vertices: Vec<usize>,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}

impl StructureReport {
    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        let e = if u < v { (u, v) } else { (v, u) };
        self.bridges.binary_search(&e).is_ok()
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Single-pass lowpoint computation over an iterative DFS.
///
/// An edge (u, child) is a bridge when low[child] > disc[u]; a non-root u
/// is a cut vertex when some child has low[child] >= disc[u]; a root is a
/// cut vertex when it has at least two DFS children.
pub fn structure(g: &Graph) -> StructureReport {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut bridges = Vec::new();
    let mut cut = vec![false; n];
    let mut timer = 0usize;
    let mut components = 0usize;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        components += 1;
        let mut root_children = 0usize;
        // stack of (vertex, neighbor cursor)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
            let mut advanced = false;
            while *cursor < n {
                let u = *cursor;
                *cursor += 1;
                if !g.has_edge(v, u) {
                    continue;
                }
                if disc[u] == usize::MAX {
                    parent[u] = v;
                    if v == root {
                        root_children += 1;
                    }
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, 0));
                    advanced = true;
                    break;
                } else if u != parent[v] {
                    low[v] = low[v].min(disc[u]);
                }
            }
            if advanced {
                continue;
            }
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    bridges.push(if p < v { (p, v) } else { (v, p) });
                }
                if p != root && low[v] >= disc[p] {
                    cut[p] = true;
                }
            }
        }
        if root_children >= 2 {
            cut[root] = true;
        }
    }

    bridges.sort_unstable();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    StructureReport {
        connected: components <= 1,
        bridges,
        cut_vertices: (0..n).filter(|&v| cut[v]).collect(),
        degrees,
        max_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(spec: FamilySpec) -> Graph {
        make_family(spec).unwrap()
    }

    #[test]
    fn family_edge_counts() {
        for n in 1..=8 {
            assert_eq!(family(FamilySpec::Path(n)).edge_count(), n - 1);
            assert_eq!(
                family(FamilySpec::Complete(n)).edge_count(),
                n * (n - 1) / 2
            );
            assert_eq!(family(FamilySpec::Star(n)).edge_count(), n);
        }
        for n in 3..=8 {
            assert_eq!(family(FamilySpec::Cycle(n)).edge_count(), n);
            assert_eq!(family(FamilySpec::Wheel(n)).edge_count(), 2 * n);
        }
    }

    #[test]
    fn family_shapes() {
        let c4 = family(FamilySpec::Cycle(4));
        assert_eq!(c4.n(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));

        let w5 = family(FamilySpec::Wheel(5));
        assert_eq!(w5.n(), 6);
        assert_eq!(w5.degree(5), 5);

        let star3 = family(FamilySpec::Star(3));
        assert_eq!(star3.n(), 4);
        assert_eq!(star3.edge_count(), 3);
        assert_eq!(star3.max_degree(), 3);
    }

    #[test]
    fn family_parameter_errors() {
        assert!(make_family(FamilySpec::Path(0)).is_err());
        assert!(make_family(FamilySpec::Cycle(2)).is_err());
        assert!(make_family(FamilySpec::Wheel(2)).is_err());
        assert!(make_family(FamilySpec::Star(0)).is_err());
        assert!(make_family(FamilySpec::Complete(0)).is_err());
    }

    #[test]
    fn add_edge_is_idempotent_and_rejects_loops() {
        let mut g = Graph::empty(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
    }

    #[test]
    fn structure_of_path() {
        let p4 = family(FamilySpec::Path(4));
        let s = structure(&p4);
        assert!(s.connected);
        assert_eq!(s.bridges, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(s.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn structure_of_cycle() {
        let c5 = family(FamilySpec::Cycle(5));
        let s = structure(&c5);
        assert!(s.connected);
        assert!(s.bridges.is_empty());
        assert!(s.cut_vertices.is_empty());
    }

    #[test]
    fn structure_of_star() {
        let s = structure(&family(FamilySpec::Star(3)));
        assert_eq!(s.max_degree, 3);
        assert_eq!(s.cut_vertices, vec![0]);
        assert_eq!(s.bridges.len(), 3);
    }

    #[test]
    fn bridge_deletion_disconnects() {
        // every reported bridge disconnects; every non-bridge leaves the
        // graph connected (C_4 with a pendant vertex)
        let mut g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let s = structure(&g);
        assert_eq!(s.bridges, vec![(3, 4)]);
        for (u, v) in g.edges() {
            let was_bridge = s.is_bridge(u, v);
            g.remove_edge(u, v);
            assert_eq!(!g.is_connected(), was_bridge, "edge ({u},{v})");
            g.add_edge(u, v).unwrap();
        }
    }

    #[test]
    fn relabel_preserves_shape() {
        let g = family(FamilySpec::Path(4));
        let h = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }
}
