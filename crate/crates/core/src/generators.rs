//! Named graph families used throughout the tests, the CLI and the benches.

use crate::graph::{Edge, Graph};

/// Path `P_n` on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edge_iter(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edge_iter(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_iter(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edge_iter(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edge_iter(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edge_iter(10, outer.chain(inner).chain(spokes))
}

/// The 5-cycle `0..5` plus a sixth vertex adjacent to the non-adjacent
/// cycle vertices 0 and 2. Diameter two and girth four (`0-1-2-5`); it has a
/// spanning subgraph of diameter three but no spanning tree of diameter three.
pub fn c5_plus_vertex() -> Graph {
    Graph::from_edge_iter(6, (0..5).map(|i| (i, (i + 1) % 5)).chain([(0, 5), (2, 5)]))
}

/// Extremal graph with `n` vertices, diameter `d >= 2` and the maximum
/// possible number of edges `d + (n-d-1)(n-d+4)/2`: a path `0..=d` plus a
/// clique on the remaining `n-d-1` vertices, each joined to `0`, `1`, `2`.
pub fn max_edges_with_diameter(n: usize, d: usize) -> Graph {
    assert!(d >= 2 && n > d, "need 2 <= d < n");
    let extra = d + 1..n;
    let path = (1..=d).map(|i| Edge::new(i - 1, i));
    let clique = extra
        .clone()
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)));
    let spokes = extra.flat_map(|x| (0..3).map(move |p| Edge::new(p, x)));
    Graph::from_edge_iter(n, path.chain(clique).chain(spokes))
}
