//! Distances, diameter, girth, cycle weights and connectivity.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{Dist, Edge, Graph};

/// Hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Dist>, GraphError> {
    g.check_vertex(source)?;
    Ok(bfs_row(g, source, None))
}

/// BFS that optionally pretends one edge is absent.
pub(crate) fn bfs_row(g: &Graph, source: usize, skip: Option<Edge>) -> Vec<Dist> {
    let mut dist = vec![Dist::Infinite; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = Dist::Finite(0);
    queue.push_back((source, 0usize));
    while let Some((u, du)) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if skip == Some(Edge::new(u, w)) {
                continue;
            }
            if dist[w] == Dist::Infinite {
                dist[w] = Dist::Finite(du + 1);
                queue.push_back((w, du + 1));
            }
        }
    }
    dist
}

/// All-pairs hop distances, one BFS per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    rows: Vec<Vec<Dist>>,
}

impl DistanceTable {
    pub fn new(g: &Graph) -> Self {
        DistanceTable {
            rows: (0..g.n()).map(|s| bfs_row(g, s, None)).collect(),
        }
    }

    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.rows[u][v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.rows[u]
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }
}

/// Diameter together with the lexicographically first pair realizing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Diameter {
    pub value: Dist,
    pub pair: Option<(usize, usize)>,
}

/// Maximum distance over all vertex pairs; infinite iff disconnected.
/// Graphs with fewer than two vertices have diameter 0 and no pair.
pub fn diameter(g: &Graph) -> Diameter {
    let mut best = Diameter {
        value: Dist::Finite(0),
        pair: None,
    };
    for u in 0..g.n() {
        let row = bfs_row(g, u, None);
        for (v, &d) in row.iter().enumerate().skip(u + 1) {
            if best.pair.is_none() || d > best.value {
                best = Diameter {
                    value: d,
                    pair: Some((u, v)),
                };
                if d == Dist::Infinite {
                    return best;
                }
            }
        }
    }
    best
}

pub fn diameter_value(g: &Graph) -> Dist {
    diameter(g).value
}

/// Length of a shortest cycle; infinite for forests.
pub fn girth(g: &Graph) -> Dist {
    // A BFS from r finds, for each non-tree edge uw, a closed walk through r of
    // length d(u)+d(w)+1 containing a cycle no longer than that; the minimum
    // over all roots is attained by a root lying on a shortest cycle.
    let mut best = Dist::Infinite;
    for r in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        let mut queue = VecDeque::new();
        dist[r] = 0;
        queue.push_back(r);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = Dist::Finite(dist[u] + dist[w] + 1);
                    if len < best {
                        best = len;
                    }
                }
            }
        }
    }
    best
}

/// Per-edge length of the shortest cycle through that edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWeights {
    edges: Vec<Edge>,
    weights: Vec<Dist>,
}

impl CycleWeights {
    pub fn get(&self, e: Edge) -> Option<Dist> {
        self.edges.binary_search(&e).ok().map(|i| self.weights[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Dist)> + '_ {
        self.edges.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn min(&self) -> Dist {
        self.weights.iter().copied().min().unwrap_or(Dist::Infinite)
    }
}

/// `w_G(e) = 1 + dist_{G-e}(u, v)` for every edge `e = uv`.
pub fn cycle_weights(g: &Graph) -> CycleWeights {
    let weights = g.edges().iter().map(|&e| edge_cycle_weight(g, e)).collect();
    CycleWeights {
        edges: g.edges().to_vec(),
        weights,
    }
}

/// Cycle weight of a single edge of `g`.
pub fn edge_cycle_weight(g: &Graph, e: Edge) -> Dist {
    bfs_row(g, e.u(), Some(e))[e.v()].plus(1)
}

/// How deleting one edge from a diameter-two graph changes the diameter,
/// keyed by the edge's cycle weight (3, 4, 5 or infinity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionClass {
    /// `w = 3`: diameter stays 2 or becomes 3.
    TwoOrThree,
    /// `w = 4`: diameter becomes exactly 3.
    Three,
    /// `w = 5`: diameter becomes at least 4.
    AtLeastFour,
    /// cut-edge.
    Disconnects,
}

impl DeletionClass {
    /// Whether an observed diameter of `G - e` is consistent with the class.
    pub fn admits(self, d: Dist) -> bool {
        match self {
            DeletionClass::TwoOrThree => d == 2 || d == 3,
            DeletionClass::Three => d == 3,
            DeletionClass::AtLeastFour => d.is_finite() && d >= Dist::Finite(4),
            DeletionClass::Disconnects => d == Dist::Infinite,
        }
    }
}

/// Classifies the deletion of `e` from a diameter-two graph.
pub fn classify_deletion(g: &Graph, e: Edge) -> Result<DeletionClass, GraphError> {
    let d = diameter_value(g);
    if d != 2 {
        return Err(GraphError::WrongDiameter {
            expected: "2".into(),
            found: d.to_string(),
        });
    }
    if !g.contains_edge(e) {
        return Err(GraphError::MissingEdge(e));
    }
    match edge_cycle_weight(g, e) {
        Dist::Finite(3) => Ok(DeletionClass::TwoOrThree),
        Dist::Finite(4) => Ok(DeletionClass::Three),
        Dist::Finite(5) => Ok(DeletionClass::AtLeastFour),
        Dist::Infinite => Ok(DeletionClass::Disconnects),
        Dist::Finite(w) => Err(GraphError::WrongDiameter {
            expected: "2 (cycle weight in 3..=5)".into(),
            found: format!("an edge of cycle weight {w}"),
        }),
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let labels = component_labels(g);
    let count = labels.iter().copied().max().map_or(0, |c| c + 1);
    let mut out = vec![Vec::new(); count];
    for (v, &c) in labels.iter().enumerate() {
        out[c].push(v);
    }
    out
}

/// Component index of every vertex, numbered in order of first appearance.
pub fn component_labels(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n()];
    let mut next = 0;
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || bfs_row(g, 0, None).iter().all(|d| d.is_finite())
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Dist, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(bfs_row(g, u, None)[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    const INF: Dist = Dist::Infinite;

    fn fin(v: &[usize]) -> Vec<Dist> {
        v.iter().map(|&d| Dist::Finite(d)).collect()
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&cycle(5), 0).unwrap(), fin(&[0, 1, 2, 2, 1]));
        assert_eq!(bfs_distances(&path(4), 0).unwrap(), fin(&[0, 1, 2, 3]));
        assert_eq!(
            bfs_distances(&Graph::empty(2), 0).unwrap(),
            vec![Dist::Finite(0), INF]
        );
        assert!(bfs_distances(&path(2), 2).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter_value(&cycle(5)), 2);
        assert_eq!(diameter_value(&petersen()), 2);
        assert_eq!(diameter_value(&cycle(4)), 2);
        let d = diameter(&path(4));
        assert_eq!(d.value, 3);
        assert_eq!(d.pair, Some((0, 3)));
        assert_eq!(diameter_value(&Graph::empty(3)), INF);
        assert_eq!(diameter(&Graph::empty(1)).pair, None);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&complete(4)), 3);
        assert_eq!(girth(&petersen()), 5);
        assert_eq!(girth(&star(3)), INF);
        assert_eq!(girth(&cycle(7)), 7);
    }

    #[test]
    fn cycle_weight_examples() {
        assert!(cycle_weights(&cycle(5)).iter().all(|(_, w)| w == 5));
        assert!(cycle_weights(&complete(4)).iter().all(|(_, w)| w == 3));
        assert!(cycle_weights(&star(3)).iter().all(|(_, w)| w == INF));
    }

    #[test]
    fn classify_examples() {
        let e = Edge::new(0, 1);
        assert_eq!(classify_deletion(&cycle(5), e).unwrap(), DeletionClass::AtLeastFour);
        assert_eq!(diameter_value(&cycle(5).delete_edge(e).unwrap()), 4);
        // K4 itself has diameter 1; K4 minus an edge is the diameter-two stand-in.
        assert!(classify_deletion(&complete(4), e).is_err());
        let k4e = complete(4).delete_edge(e).unwrap();
        let f = Edge::new(2, 3);
        assert_eq!(classify_deletion(&k4e, f).unwrap(), DeletionClass::TwoOrThree);
        assert_eq!(diameter_value(&k4e.delete_edge(f).unwrap()), 2);
        assert_eq!(classify_deletion(&cycle(4), e).unwrap(), DeletionClass::Three);
        assert_eq!(diameter_value(&cycle(4).delete_edge(e).unwrap()), 3);
        assert_eq!(classify_deletion(&star(3), e).unwrap(), DeletionClass::Disconnects);
        assert!(classify_deletion(&path(4), e).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(components(&cycle(5)).len(), 1);
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(components(&two), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(components(&Graph::empty(3)), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn delete_edges_examples() {
        let k4 = complete(4).delete_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(k4.m(), 5);
        assert_eq!(diameter_value(&k4), 2);
        let p5 = cycle(5).delete_edge(Edge::new(0, 4)).unwrap();
        assert_eq!(p5, path(5));
    }
}
