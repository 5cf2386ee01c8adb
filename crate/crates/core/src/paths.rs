//! Long paths and the depth-first spanning trees built around them.

use crate::error::GraphError;
use crate::graph::{Edge, Graph};
use crate::metrics::is_connected;

/// A simple path with at least `d` edges, if one exists.
///
/// Depth-bounded DFS from every start vertex with backtracking; the search
/// stops as soon as the current path reaches `d` edges, so the result has
/// exactly `d` edges. Exhaustive, hence never a false negative.
pub fn find_path_of_length_at_least(g: &Graph, d: usize) -> Option<Vec<usize>> {
    if g.n() == 0 || d >= g.n() {
        return None;
    }
    let mut visited = vec![false; g.n()];
    let mut path = Vec::with_capacity(d + 1);
    for s in 0..g.n() {
        visited[s] = true;
        path.push(s);
        if extend(g, d, &mut path, &mut visited) {
            return Some(path);
        }
        path.pop();
        visited[s] = false;
    }
    None
}

fn extend(g: &Graph, d: usize, path: &mut Vec<usize>, visited: &mut [bool]) -> bool {
    if path.len() > d {
        return true;
    }
    let u = *path.last().expect("path is never empty here");
    for &w in g.neighbors(u) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        path.push(w);
        if extend(g, d, path, visited) {
            return true;
        }
        path.pop();
        visited[w] = false;
    }
    false
}

/// Checks that `p` is a simple path in `g`.
pub fn check_path(g: &Graph, p: &[usize]) -> Result<(), GraphError> {
    let mut seen = vec![false; g.n()];
    for &v in p {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(GraphError::NotAPath(p.to_vec()));
        }
    }
    if p.is_empty() || p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(GraphError::NotAPath(p.to_vec()));
    }
    Ok(())
}

/// Spanning tree of a connected graph produced by a depth-first traversal
/// that first walks along `p`. The path becomes a root-to-descendant branch,
/// so the tree distance between its endpoints is `p.len() - 1`.
pub fn spanning_tree_from_path(g: &Graph, p: &[usize]) -> Result<Graph, GraphError> {
    check_path(g, p)?;
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    let mut visited = vec![false; g.n()];
    let mut tree: Vec<Edge> = Vec::with_capacity(g.n().saturating_sub(1));
    // (vertex, index of the next neighbour to try)
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(g.n());
    for (i, &v) in p.iter().enumerate() {
        visited[v] = true;
        if i > 0 {
            tree.push(Edge::new(p[i - 1], v));
        }
        stack.push((v, 0));
    }
    while let Some(top) = stack.last_mut() {
        let (u, next) = *top;
        let nbrs = g.neighbors(u);
        match nbrs[next..].iter().position(|&w| !visited[w]) {
            Some(off) => {
                let w = nbrs[next + off];
                top.1 = next + off + 1;
                visited[w] = true;
                tree.push(Edge::new(u, w));
                stack.push((w, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    Ok(Graph::from_edge_iter(g.n(), tree))
}
