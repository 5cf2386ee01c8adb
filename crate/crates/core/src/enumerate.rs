//! Exhaustive small-graph generation.
//!
//! Isomorphism classes are produced by vertex extension: every class on
//! `n` vertices arises from a class on `n - 1` vertices plus one new vertex
//! with an arbitrary neighbourhood. Duplicates are removed through a
//! canonical code, the minimum adjacency bitstring over all relabelings
//! that respect a degree-based vertex invariant.

use std::collections::BTreeSet;

use crate::graph::{Edge, Graph};
use crate::metrics::is_connected;

/// Largest order for which canonical codes fit in a `u64`.
pub const MAX_CANONICAL_ORDER: usize = 11;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

fn code_under(g: &Graph, pos: &[usize]) -> u64 {
    g.edges()
        .iter()
        .fold(0u64, |acc, e| acc | 1u64 << pair_bit(pos[e.u()], pos[e.v()]))
}

fn decode(n: usize, code: u64) -> Graph {
    let edges = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| code >> pair_bit(i, j) & 1 == 1)
        .map(|(i, j)| Edge::new(i, j));
    Graph::from_edge_iter(n, edges)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Canonical code of `g`: equal for isomorphic graphs, distinct otherwise.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical codes support n <= {MAX_CANONICAL_ORDER}");
    let invariant = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| invariant(v));

    // Vertices with equal invariants form a class occupying a block of
    // consecutive positions; only permutations inside blocks are tried.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if invariant(c[0]) == invariant(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let perms: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();
    let mut choice = vec![0usize; classes.len()];
    let mut pos = vec![0usize; n];
    let mut best = u64::MAX;
    loop {
        let mut p = 0;
        for (c, &k) in choice.iter().enumerate() {
            for &v in &perms[c][k] {
                pos[v] = p;
                p += 1;
            }
        }
        best = best.min(code_under(g, &pos));
        // odometer over the per-class permutation lists
        let mut c = 0;
        loop {
            if c == choice.len() {
                return best;
            }
            choice[c] += 1;
            if choice[c] < perms[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    decode(g.n(), canonical_code(g))
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical code.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let prev: Vec<Graph> = level.iter().map(|&c| decode(k - 1, c)).collect();
        level = BTreeSet::new();
        for h in &prev {
            for mask in 0u32..(1 << (k - 1)) {
                let extra = (0..k - 1)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| Edge::new(i, k - 1));
                let g = Graph::from_edge_iter(k, h.edges().iter().copied().chain(extra));
                level.insert(canonical_code(&g));
            }
        }
    }
    level.into_iter().map(|c| decode(n, c)).collect()
}

pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(is_connected).collect()
}

/// Connected isomorphism classes on `1..=max_n` vertices, by order then code.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs_up_to_iso).collect()
}

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is limited to n <= 8");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edge_iter(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
    })
}
