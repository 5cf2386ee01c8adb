//! Bit-parallel adjacency for the brute-force oracle's inner loop.
//!
//! Supports up to 128 vertices. One BFS level is the union of the frontier's
//! neighbour masks, so eccentricities cost O(n * levels) word operations.

use crate::graph::{Dist, Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitGraph {
    n: usize,
    adj: Vec<u128>,
}

pub(crate) const MAX_VERTICES: usize = 128;

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl BitGraph {
    pub(crate) fn from_graph(g: &Graph) -> Option<Self> {
        if g.n() > MAX_VERTICES {
            return None;
        }
        let mut adj = vec![0u128; g.n()];
        for e in g.edges() {
            adj[e.u()] |= 1 << e.v();
            adj[e.v()] |= 1 << e.u();
        }
        Some(BitGraph { n: g.n(), adj })
    }

    pub(crate) fn remove(&mut self, e: Edge) {
        self.adj[e.u()] &= !(1u128 << e.v());
        self.adj[e.v()] &= !(1u128 << e.u());
    }

    /// Copies `base` into `self` without reallocating.
    pub(crate) fn reset_from(&mut self, base: &BitGraph) {
        self.adj.copy_from_slice(&base.adj);
    }

    fn full(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    /// BFS levels from `src`, stopping early once `stop_at` levels are
    /// reached. Returns (levels walked, visited set).
    fn sweep(&self, src: usize, stop_at: usize) -> (usize, u128) {
        let mut visited = 1u128 << src;
        let mut frontier = visited;
        let mut level = 0;
        while level < stop_at {
            let mut next = 0u128;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !visited;
            if next == 0 {
                break;
            }
            visited |= next;
            frontier = next;
            level += 1;
        }
        (level, visited)
    }

    pub(crate) fn is_connected(&self) -> bool {
        self.n == 0 || self.sweep(0, usize::MAX).1 == self.full()
    }

    pub(crate) fn distance(&self, x: usize, y: usize) -> Dist {
        let mut visited = 1u128 << x;
        let mut frontier = visited;
        let mut level = 0;
        while visited & (1u128 << y) == 0 {
            let mut next = 0u128;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !visited;
            if next == 0 {
                return Dist::Infinite;
            }
            visited |= next;
            frontier = next;
            level += 1;
        }
        Dist::Finite(level)
    }

    #[cfg(test)]
    pub(crate) fn diameter(&self) -> Dist {
        let full = self.full();
        let mut best = 0;
        for s in 0..self.n {
            let (ecc, seen) = self.sweep(s, usize::MAX);
            if seen != full {
                return Dist::Infinite;
            }
            best = best.max(ecc);
        }
        Dist::Finite(best)
    }

    /// `diameter() >= d`, exiting at the first witness. Disconnected graphs
    /// count as infinite diameter.
    pub(crate) fn diameter_at_least(&self, d: usize) -> bool {
        let full = self.full();
        (0..self.n).any(|s| {
            let (ecc, seen) = self.sweep(s, d);
            seen != full || ecc >= d
        })
    }

    /// `diameter() == d` for a graph already known to be connected.
    pub(crate) fn connected_diameter_is(&self, d: usize) -> bool {
        let mut hit = false;
        for s in 0..self.n {
            let (ecc, _) = self.sweep(s, d + 1);
            if ecc > d {
                return false;
            }
            hit |= ecc == d;
        }
        hit
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{diameter_value, distance, is_connected};
    use proptest::prelude::*;

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
                Graph::from_edge_iter(
                    n,
                    pairs.iter().zip(mask).filter(|(_, b)| *b).map(|(p, _)| *p),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_adjacency_list_bfs(g in arb_graph()) {
            let b = BitGraph::from_graph(&g).unwrap();
            prop_assert_eq!(b.is_connected(), is_connected(&g));
            let d = diameter_value(&g);
            prop_assert_eq!(b.diameter(), d);
            for k in 0..g.n() + 1 {
                prop_assert_eq!(b.diameter_at_least(k), d >= Dist::Finite(k));
                if d.is_finite() {
                    prop_assert_eq!(b.connected_diameter_is(k), d == k);
                }
            }
            for x in 0..g.n() {
                for y in 0..g.n() {
                    prop_assert_eq!(b.distance(x, y), distance(&g, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn handles_128_vertices() {
        let g = crate::generators::path(128);
        let b = BitGraph::from_graph(&g).unwrap();
        assert!(b.is_connected());
        assert_eq!(b.diameter(), 127);
        assert!(BitGraph::from_graph(&crate::generators::path(129)).is_none());
    }
}
