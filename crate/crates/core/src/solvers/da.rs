use crate::error::SolverError;
use crate::graph::Graph;
use crate::metrics::is_connected;
use crate::paths::{find_path_of_length_at_least, spanning_tree_from_path};

use super::{Method, Solution, Verdict};

/// Some connected spanning subgraph has diameter at least `d` iff `g` has a
/// path with `d` edges; the witness leaves a depth-first tree grown from
/// such a path.
pub fn solve_da(g: &Graph, d: usize) -> Result<Solution, SolverError> {
    if !is_connected(g) {
        return Err(SolverError::Precondition("input graph is disconnected".into()));
    }
    let Some(p) = find_path_of_length_at_least(g, d) else {
        return Ok(Solution::negative(Verdict::No, Method::LongPath));
    };
    let tree = spanning_tree_from_path(g, &p)?;
    let f = g.difference(&tree);
    Ok(Solution::witness(g, f, false, Method::LongPath)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::graph::Dist;

    #[test]
    fn da_examples() {
        let s = solve_da(&cycle(5), 4).unwrap();
        assert_eq!(s.verdict, Verdict::Yes);
        assert_eq!(s.deleted.as_ref().map(|f| f.len()), Some(1));
        assert_eq!(s.achieved_diameter, Some(Dist::Finite(4)));

        assert_eq!(solve_da(&star(3), 3).unwrap().verdict, Verdict::No);

        let s = solve_da(&complete(4), 3).unwrap();
        assert_eq!(s.verdict, Verdict::Yes);
        assert!(s.achieved_diameter.unwrap() >= Dist::Finite(3));
    }

    #[test]
    fn disconnected_input_is_rejected() {
        assert!(solve_da(&Graph::empty(2), 1).is_err());
    }
}
