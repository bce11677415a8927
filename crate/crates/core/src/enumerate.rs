//! Exhaustive labeled enumeration of small connected graphs.
//!
//! Enumeration is over labeled graphs with no isomorphism reduction: the
//! verified bounds are isomorphism-invariant, so duplicates only cost
//! time. Edge subsets are walked as bitmasks in ascending numeric order,
//! with bit `i` standing for the `i`-th pair in lexicographic order
//! (0,1),(0,2),...,(0,n-1),(1,2),...

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on the labeled-enumeration budget (2^21 masks at n = 7).
pub const MAX_ENUM_VERTICES: usize = 7;

/// Lexicographically ordered vertex pairs on `0..n`.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Materializes the graph selected by an edge-subset bitmask.
pub fn graph_from_edge_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v).expect("pairs are in range");
        }
    }
    g
}

/// Connectivity test straight off the bitmask; avoids building a `Graph`
/// for the (majority of) masks that get filtered out.
pub fn mask_is_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    if n == 0 {
        return true;
    }
    let mut nbr = [0u64; MAX_ENUM_VERTICES];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            nbr[u] |= 1 << v;
            nbr[v] |= 1 << u;
        }
    }
    let all = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut reached = 1u64;
    loop {
        let mut next = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= nbr[v];
        }
        if next == reached {
            return reached == all;
        }
        reached = next;
    }
}

/// Streams every labeled connected simple graph on `n` vertices exactly
/// once, in ascending edge-mask order.
pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    if !(1..=MAX_ENUM_VERTICES).contains(&n) {
        return Err(Error::budget(format!(
            "labeled enumeration supports 1..={MAX_ENUM_VERTICES} vertices, got {n}"
        )));
    }
    let pairs = edge_pairs(n);
    let end = 1u64 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next: 0,
        end,
    })
}

/// Single-consumer stream; parallel scans partition the mask range
/// themselves instead of sharing one iterator.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if mask_is_connected(self.n, &self.pairs, mask) {
                return Some(graph_from_edge_mask(self.n, &self.pairs, mask));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_brute_force() {
        // labeled connected graph counts for n = 1..=5
        let expected = [1usize, 1, 4, 38, 728];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let got = enumerate_connected_graphs(n).unwrap().count();
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn independent_filter_agrees_at_n4() {
        // re-count with Graph::is_connected as the filter
        let pairs = edge_pairs(4);
        let mut count = 0;
        for mask in 0..(1u64 << pairs.len()) {
            if graph_from_edge_mask(4, &pairs, mask).is_connected() {
                count += 1;
            }
        }
        assert_eq!(count, 38);
        assert_eq!(enumerate_connected_graphs(4).unwrap().count(), 38);
    }

    #[test]
    fn n3_graphs_are_three_paths_and_a_triangle() {
        let graphs: Vec<Graph> = enumerate_connected_graphs(3).unwrap().collect();
        assert_eq!(graphs.len(), 4);
        let mut two_edges = 0;
        let mut three_edges = 0;
        for g in &graphs {
            match g.edge_count() {
                2 => two_edges += 1,
                3 => three_edges += 1,
                m => panic!("unexpected edge count {m}"),
            }
        }
        assert_eq!((two_edges, three_edges), (3, 1));
    }

    #[test]
    fn single_vertex() {
        let graphs: Vec<Graph> = enumerate_connected_graphs(1).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].n(), 1);
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(
            enumerate_connected_graphs(8),
            Err(Error::Budget(_))
        ));
        assert!(matches!(
            enumerate_connected_graphs(0),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<Graph> = enumerate_connected_graphs(4).unwrap().collect();
        let b: Vec<Graph> = enumerate_connected_graphs(4).unwrap().collect();
        assert_eq!(a, b);
    }
}
