use crate::error::SolverError;
use crate::generators::max_edges_with_diameter;
use crate::graph::{EdgeSet, Graph};

use super::{Method, ProblemKind, Solution, Verdict};

/// Maximum number of edges in an `n`-vertex graph of diameter `d`
/// (`None` when no such graph exists, i.e. `n < d + 1`).
pub fn ore_max_edges(n: usize, d: usize) -> Option<usize> {
    if d == 0 || n < d + 1 {
        return None;
    }
    if d == 1 {
        return Some(n * (n - 1) / 2);
    }
    Some(d + (n - d - 1) * (n - d + 4) / 2)
}

/// Answers any non-MDI kind on a complete graph.
///
/// The witness leaves the extremal graph of diameter `d`; since the extremal
/// edge count decreases with `d`, it is also optimal for "at least `d`".
pub fn solve_complete(g: &Graph, d: usize, kind: ProblemKind) -> Result<Solution, SolverError> {
    if !g.is_complete() {
        return Err(SolverError::Precondition("input is not a complete graph".into()));
    }
    if kind == ProblemKind::Mdi {
        return Err(SolverError::InvalidProblem("mdi is not handled by the complete-graph solver".into()));
    }
    let n = g.n();
    let Some(keep) = ore_max_edges(n, d) else {
        let verdict = if kind.is_minimization() { Verdict::Infeasible } else { Verdict::No };
        return Ok(Solution::negative(verdict, Method::CompleteGraph));
    };
    let f = if d == 1 {
        EdgeSet::new()
    } else {
        g.difference(&max_edges_with_diameter(n, d))
    };
    debug_assert_eq!(f.len(), g.m() - keep);
    Ok(Solution::witness(g, f, kind.is_minimization(), Method::CompleteGraph)?)
}
