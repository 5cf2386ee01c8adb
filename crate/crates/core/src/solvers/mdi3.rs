//! `dist(x, y) >= 3` with the fewest deletions.
//!
//! A valid `F` must contain `xy` (when present) and at least one edge of
//! every path `x - z - y`. Taking more than one edge of such a path never
//! helps connectivity, so the optimum is `[xy in E] + |N(x) ∩ N(y)|`
//! whenever some choice of exactly one edge per common neighbour keeps the
//! graph connected. That is decided on the graph `G'` with all of those
//! edges removed: a common neighbour `z` reattaches its own component of
//! `G'` to the component of `x` (keep `xz`) or of `y` (keep `zy`).

use crate::error::SolverError;
use crate::graph::{Edge, EdgeSet, Graph};
use crate::metrics::{component_labels, distance, is_connected};

use super::{Method, Solution, Verdict};

pub fn solve_mdi3(g: &Graph, x: usize, y: usize) -> Result<Solution, SolverError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(SolverError::InvalidProblem("x and y must differ".into()));
    }
    if !is_connected(g) {
        return Err(SolverError::Precondition("input graph is disconnected".into()));
    }
    if distance(g, x, y)? >= 3.into() {
        return Ok(Solution::witness(g, EdgeSet::new(), true, Method::Mdi3)?);
    }
    match mdi3_cut(g, x, y) {
        Some(f) => {
            let h = g.delete_edges(&f)?;
            if !is_connected(&h) || distance(&h, x, y)? < 3.into() {
                return Err(SolverError::InvariantViolation(format!(
                    "distance-three cut {f} for ({x}, {y}) does not verify"
                )));
            }
            Ok(Solution::witness(g, f, true, Method::Mdi3)?)
        }
        None => Ok(Solution::negative(Verdict::Infeasible, Method::Mdi3)),
    }
}

/// Lower bound `[xy in E] + |N(x) ∩ N(y)|`, exact whenever feasible.
pub(crate) fn mdi3_size(g: &Graph, x: usize, y: usize) -> usize {
    usize::from(g.has_edge(x, y)) + g.common_neighbors(x, y).len()
}

/// Optimal cut for a pair at distance at most two, or `None` if every
/// candidate disconnects the graph.
pub(crate) fn mdi3_cut(g: &Graph, x: usize, y: usize) -> Option<EdgeSet> {
    let zs = g.common_neighbors(x, y);
    let mut removed: EdgeSet = zs
        .iter()
        .flat_map(|&z| [Edge::new(x, z), Edge::new(z, y)])
        .collect();
    if g.has_edge(x, y) {
        removed.insert(Edge::new(x, y));
    }
    let reduced = g.delete_edges(&removed).expect("removed edges come from g");
    let label = component_labels(&reduced);
    let count = label.iter().copied().max().map_or(0, |c| c + 1);
    let (cx, cy) = (label[x], label[y]);

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for &z in &zs {
        members[label[z]].push(z);
    }
    let anchored = |c: usize| c == cx || c == cy || !members[c].is_empty();
    if !(0..count).all(anchored) {
        return None;
    }

    // keep_xz[i]: keep x-z (delete z-y) rather than the other way round
    let mut keep_xz = vec![true; zs.len()];
    let mut bridged = cx == cy;
    for (i, &z) in zs.iter().enumerate() {
        if label[z] == cx {
            keep_xz[i] = false;
            bridged = true;
        } else if label[z] == cy {
            bridged = true;
        }
    }
    if !bridged {
        let via = (0..count).find(|&c| c != cx && c != cy && members[c].len() >= 2)?;
        let second = zs.binary_search(&members[via][1]).expect("member of Z");
        keep_xz[second] = false;
    }

    let mut f = EdgeSet::new();
    if g.has_edge(x, y) {
        f.insert(Edge::new(x, y));
    }
    for (i, &z) in zs.iter().enumerate() {
        f.insert(if keep_xz[i] { Edge::new(z, y) } else { Edge::new(x, z) });
    }
    Some(f)
}
