//! Benchmark-only crate; see `benches/`.

/// Petersen graph, the standard non-trivial solver workload.
pub fn petersen() -> domchrom_core::Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, 5 + (i + 2) % 5));
    }
    domchrom_core::Graph::from_edges(10, &edges).unwrap()
}
