//! Shared fixtures for the criterion benches.

use diam_core::generators::{complete, cycle};
use diam_core::Graph;

/// `n x n` grid graph; diameter `2(n - 1)`, girth 4.
pub fn grid(n: usize) -> Graph {
    let id = |r: usize, c: usize| r * n + c;
    let right = (0..n).flat_map(|r| (1..n).map(move |c| (id(r, c - 1), id(r, c))));
    let down = (1..n).flat_map(|r| (0..n).map(move |c| (id(r - 1, c), id(r, c))));
    Graph::from_edge_iter(n * n, right.chain(down))
}

/// Cycle with a chord from vertex 0 to every other vertex in `step`.
pub fn wheel_like(n: usize, step: usize) -> Graph {
    let chords = (2..n - 1).step_by(step.max(1)).map(|v| (0, v));
    Graph::from_edge_iter(n, cycle(n).edges().iter().map(|e| e.endpoints()).chain(chords))
}

/// Complete graph with a perfect matching removed; diameter 2.
pub fn cocktail_party(pairs: usize) -> Graph {
    let k = complete(2 * pairs);
    Graph::from_edge_iter(
        2 * pairs,
        k.edges().iter().map(|e| e.endpoints()).filter(|&(u, v)| !(u % 2 == 0 && v == u + 1)),
    )
}
