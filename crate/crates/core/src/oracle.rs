//! Brute-force ground truth for every deletion problem.
//!
//! Candidate deletion sets are enumerated by increasing size and, within a
//! size, in lexicographic order of the canonical edge list. The first set
//! that passes is returned, so the answer is the lexicographically smallest
//! optimum. With `parallel` set the search is split by the first edge of the
//! combination and the leftmost hit wins, which yields the same answer.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitgraph::{BitGraph, MAX_VERTICES};
use crate::enumerate::connected_graphs_up_to_iso;
use crate::error::OracleError;
use crate::graph::{Dist, Edge, EdgeSet, Graph};
use crate::metrics::{diameter_value, is_connected};

/// Limits enforced before any enumeration starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Refuse candidate pools with more edges than this.
    pub max_edges: usize,
    /// Largest deletion set considered; `None` means unbounded.
    pub max_subset_size: Option<usize>,
    pub parallel: bool,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_edges: 40,
            max_subset_size: None,
            parallel: false,
        }
    }
}

impl OracleBudget {
    pub fn with_max_edges(self, max_edges: usize) -> Self {
        OracleBudget { max_edges, ..self }
    }

    pub fn with_max_subset_size(self, k: usize) -> Self {
        OracleBudget {
            max_subset_size: Some(k),
            ..self
        }
    }

    pub fn parallel(self, parallel: bool) -> Self {
        OracleBudget { parallel, ..self }
    }
}

/// What a candidate `G - F` must satisfy (connectivity is always required).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    DiameterExactly(usize),
    DiameterAtLeast(usize),
    DistanceAtLeast { x: usize, y: usize, d: usize },
}

impl Target {
    fn accepts(self, h: &BitGraph) -> bool {
        if !h.is_connected() {
            return false;
        }
        match self {
            Target::DiameterExactly(d) => h.connected_diameter_is(d),
            Target::DiameterAtLeast(d) => h.diameter_at_least(d),
            Target::DistanceAtLeast { x, y, d } => h.distance(x, y) >= Dist::Finite(d),
        }
    }
}

struct Search<'a> {
    base: BitGraph,
    pool: &'a [Edge],
    target: Target,
}

impl Search<'_> {
    fn test(&self, work: &mut BitGraph, idx: &[usize]) -> bool {
        work.reset_from(&self.base);
        for &i in idx {
            work.remove(self.pool[i]);
        }
        self.target.accepts(work)
    }

    /// Lexicographically first passing `size`-subset whose smallest index is
    /// `first`.
    fn scan_from(&self, first: usize, size: usize) -> Option<Vec<usize>> {
        let p = self.pool.len();
        let mut idx: Vec<usize> = (first..first + size).collect();
        let mut work = self.base.clone();
        loop {
            if self.test(&mut work, &idx) {
                return Some(idx);
            }
            // next combination with idx[0] fixed
            let mut j = size;
            loop {
                if j <= 1 {
                    return None;
                }
                j -= 1;
                if idx[j] < p - (size - j) {
                    idx[j] += 1;
                    for t in j + 1..size {
                        idx[t] = idx[t - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn first_of_size(&self, size: usize, parallel: bool) -> Option<Vec<usize>> {
        if size == 0 {
            let mut work = self.base.clone();
            return self.test(&mut work, &[]).then(Vec::new);
        }
        if size > self.pool.len() {
            return None;
        }
        let firsts = 0..=self.pool.len() - size;
        if parallel {
            firsts.into_par_iter().find_map_first(|f| self.scan_from(f, size))
        } else {
            firsts.into_iter().find_map(|f| self.scan_from(f, size))
        }
    }
}

fn check_input(g: &Graph, pool: &[Edge], budget: &OracleBudget) -> Result<(), OracleError> {
    if g.n() > MAX_VERTICES {
        return Err(OracleError::TooManyVertices(g.n()));
    }
    if pool.len() > budget.max_edges {
        return Err(OracleError::BudgetExceeded {
            edges: pool.len(),
            max: budget.max_edges,
        });
    }
    if !is_connected(g) {
        return Err(OracleError::Disconnected);
    }
    if let Some(e) = pool.iter().find(|e| !g.contains_edge(**e)) {
        return Err(crate::error::GraphError::MissingEdge(*e).into());
    }
    Ok(())
}

fn search_sizes(
    g: &Graph,
    pool: &[Edge],
    target: Target,
    sizes: RangeInclusive<usize>,
    budget: &OracleBudget,
) -> Result<Option<EdgeSet>, OracleError> {
    let mut pool = pool.to_vec();
    pool.sort_unstable();
    pool.dedup();
    check_input(g, &pool, budget)?;
    let search = Search {
        base: BitGraph::from_graph(g).expect("vertex count checked"),
        pool: &pool,
        target,
    };
    for size in sizes {
        if let Some(idx) = search.first_of_size(size, budget.parallel) {
            return Ok(Some(idx.into_iter().map(|i| pool[i]).collect()));
        }
    }
    Ok(None)
}

/// Minimum deletion set drawn from `pool` such that `G - F` is connected and
/// meets `target`; `None` when no set within the budget works.
///
/// Sets larger than `m - n + 1` are never tried: removing more edges than
/// that cannot leave a connected spanning subgraph.
pub fn min_deletion_from_pool(
    g: &Graph,
    pool: &[Edge],
    target: Target,
    budget: &OracleBudget,
) -> Result<Option<EdgeSet>, OracleError> {
    let spare = g.m() + 1 - g.n().min(g.m() + 1);
    let cap = budget
        .max_subset_size
        .unwrap_or(usize::MAX)
        .min(pool.len())
        .min(spare);
    search_sizes(g, pool, target, 0..=cap, budget)
}

pub fn min_deletion(
    g: &Graph,
    target: Target,
    budget: &OracleBudget,
) -> Result<Option<EdgeSet>, OracleError> {
    min_deletion_from_pool(g, g.edges(), target, budget)
}

/// Smallest `F` with `G - F` connected of diameter exactly `d`.
pub fn oracle_meda(g: &Graph, d: usize, budget: &OracleBudget) -> Result<Option<EdgeSet>, OracleError> {
    min_deletion(g, Target::DiameterExactly(d), budget)
}

/// Smallest `F` with `G - F` connected of diameter at least `d`.
pub fn oracle_mda(g: &Graph, d: usize, budget: &OracleBudget) -> Result<Option<EdgeSet>, OracleError> {
    min_deletion(g, Target::DiameterAtLeast(d), budget)
}

/// Whether some connected spanning subgraph has diameter exactly `d`; the
/// witness returned is the minimum one.
pub fn oracle_eda(g: &Graph, d: usize, budget: &OracleBudget) -> Result<Option<EdgeSet>, OracleError> {
    oracle_meda(g, d, &OracleBudget { max_subset_size: None, ..*budget })
}

/// Whether some connected spanning subgraph has diameter at least `d`.
///
/// Deleting edges never shortens a distance, so if any connected spanning
/// subgraph qualifies then so does every spanning tree inside it; only
/// complements of spanning trees (`|F| = m - n + 1`) are enumerated.
pub fn oracle_da(g: &Graph, d: usize) -> Result<Option<EdgeSet>, OracleError> {
    oracle_da_with(g, d, &OracleBudget::default())
}

pub fn oracle_da_with(g: &Graph, d: usize, budget: &OracleBudget) -> Result<Option<EdgeSet>, OracleError> {
    if g.n() == 0 {
        return Ok(None);
    }
    let size = g.m() + 1 - g.n().min(g.m() + 1);
    search_sizes(g, g.edges(), Target::DiameterAtLeast(d), size..=size, budget)
}

/// Smallest `F` with `G - F` connected and `dist(x, y) >= d`.
pub fn oracle_mdi(
    g: &Graph,
    x: usize,
    y: usize,
    d: usize,
    budget: &OracleBudget,
) -> Result<Option<EdgeSet>, OracleError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(OracleError::InvalidArgument("x and y must differ".into()));
    }
    min_deletion(g, Target::DistanceAtLeast { x, y, d }, budget)
}

/// A graph whose diameter can jump by two with one deletion while a jump by
/// exactly one needs at least two deletions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonmonotonicityWitness {
    #[serde(skip)]
    pub graph: Graph,
    pub base_diameter: usize,
    /// One edge whose deletion raises the diameter to at least `base + 2`.
    pub jump_by_two: EdgeSet,
    pub jump_by_two_diameter: Dist,
    /// Minimum deletion set giving diameter exactly `base + 1`.
    pub jump_by_one: EdgeSet,
}

/// Searches connected graphs on at most `max_n <= 8` vertices, by order and
/// then canonical code, for a [`NonmonotonicityWitness`].
pub fn nonmonotonicity_witness(max_n: usize) -> Result<Option<NonmonotonicityWitness>, OracleError> {
    if max_n > 8 {
        return Err(OracleError::InvalidArgument(format!(
            "witness search supports at most 8 vertices, got {max_n}"
        )));
    }
    let budget = OracleBudget::default();
    for n in 1..=max_n {
        for g in connected_graphs_up_to_iso(n) {
            let Some(d0) = diameter_value(&g).finite() else {
                continue;
            };
            let one = oracle_mda(&g, d0 + 2, &budget.with_max_subset_size(1))?;
            let Some(jump_by_two) = one else { continue };
            let Some(jump_by_one) = oracle_meda(&g, d0 + 1, &budget)? else {
                continue;
            };
            if jump_by_one.len() >= 2 {
                let jump_by_two_diameter = diameter_value(&g.delete_edges(&jump_by_two)?);
                return Ok(Some(NonmonotonicityWitness {
                    graph: g,
                    base_diameter: d0,
                    jump_by_two,
                    jump_by_two_diameter,
                    jump_by_one,
                }));
            }
        }
    }
    Ok(None)
}
