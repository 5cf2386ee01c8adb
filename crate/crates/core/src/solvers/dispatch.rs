use crate::complexity::{classify, Complexity};
use crate::error::SolverError;
use crate::graph::{Dist, Edge, EdgeSet, Graph};
use crate::metrics::{diameter_value, distance, is_connected};
use crate::oracle::{min_deletion, oracle_da_with, oracle_eda, OracleBudget, Target};

use super::{
    solve_complete, solve_da, solve_eda3, solve_mda3, solve_mdi3, solve_meda3, Method,
    ProblemKind, ProblemSpec, Regime, Solution, Verdict,
};

/// Solves `spec` on `g` with the default oracle budget.
pub fn solve(spec: &ProblemSpec, g: &Graph) -> Result<Solution, SolverError> {
    solve_with(spec, g, &OracleBudget::default())
}

/// Routes `spec` to a polynomial solver when one applies and to the oracle
/// otherwise. `budget` only matters on the oracle path.
pub fn solve_with(spec: &ProblemSpec, g: &Graph, budget: &OracleBudget) -> Result<Solution, SolverError> {
    spec.validate()?;
    if !is_connected(g) {
        return Err(SolverError::Precondition("input graph is disconnected".into()));
    }
    let (kind, d, k) = (spec.kind, spec.d, spec.k);
    if kind == ProblemKind::Mdi {
        let (x, y) = spec.pair.expect("validated");
        return Ok(solve_mdi(g, x, y, d, k, budget)?.within_budget(k));
    }

    let diam = diameter_value(g);
    if diam > Dist::Finite(d) {
        return Ok(match kind {
            ProblemKind::Eda => Solution::negative(Verdict::No, Method::Trivial),
            ProblemKind::Meda => Solution::negative(Verdict::Infeasible, Method::Trivial),
            _ => untouched(g, kind)?,
        });
    }
    if diam == Dist::Finite(d) {
        return untouched(g, kind);
    }
    if g.is_complete() {
        return Ok(solve_complete(g, d, kind)?.within_budget(k));
    }
    let solved = match (kind, d) {
        (ProblemKind::Da, _) => solve_da(g, d)?,
        (ProblemKind::Mda, 3) => solve_mda3(g)?,
        (ProblemKind::Eda, 3) => solve_eda3(g)?,
        (ProblemKind::Meda, 3) => solve_meda3(g)?,
        _ => {
            let target = match kind {
                ProblemKind::Mda => Target::DiameterAtLeast(d),
                _ => Target::DiameterExactly(d),
            };
            let regime = (kind == ProblemKind::Meda).then(|| {
                let base = diam.finite().expect("connected");
                match classify(base, d - base).complexity {
                    Complexity::NpComplete => Regime::NpComplete,
                    _ => Regime::Open,
                }
            });
            return by_oracle(g, target, kind, k, regime, budget);
        }
    };
    Ok(solved.within_budget(k))
}

/// Answers `spec` by brute force alone, skipping every shortcut.
pub fn solve_by_oracle(spec: &ProblemSpec, g: &Graph, budget: &OracleBudget) -> Result<Solution, SolverError> {
    spec.validate()?;
    let d = spec.d;
    match spec.kind {
        ProblemKind::Da => {
            let found = oracle_da_with(g, d, budget)?;
            Ok(match found {
                Some(f) => Solution::witness(g, f, false, Method::Oracle(None))?,
                None => Solution::negative(Verdict::No, Method::Oracle(None)),
            })
        }
        ProblemKind::Mda => by_oracle(g, Target::DiameterAtLeast(d), spec.kind, spec.k, None, budget),
        ProblemKind::Eda | ProblemKind::Meda => {
            by_oracle(g, Target::DiameterExactly(d), spec.kind, spec.k, None, budget)
        }
        ProblemKind::Mdi => {
            let (x, y) = spec.pair.expect("validated");
            g.check_vertex(x)?;
            g.check_vertex(y)?;
            by_oracle(g, Target::DistanceAtLeast { x, y, d }, spec.kind, spec.k, None, budget)
        }
    }
}

fn untouched(g: &Graph, kind: ProblemKind) -> Result<Solution, SolverError> {
    Ok(Solution::witness(g, EdgeSet::new(), kind.is_minimization(), Method::Trivial)?)
}

fn solve_mdi(
    g: &Graph,
    x: usize,
    y: usize,
    d: usize,
    k: Option<usize>,
    budget: &OracleBudget,
) -> Result<Solution, SolverError> {
    if distance(g, x, y)? >= Dist::Finite(d) {
        return Ok(Solution::witness(g, EdgeSet::new(), true, Method::Trivial)?);
    }
    match d {
        2 => {
            // x and y are adjacent; only xy itself has to go
            let f: EdgeSet = [Edge::new(x, y)].into_iter().collect();
            if is_connected(&g.delete_edges(&f)?) {
                Ok(Solution::witness(g, f, true, Method::Trivial)?)
            } else {
                Ok(Solution::negative(Verdict::Infeasible, Method::Trivial))
            }
        }
        3 => solve_mdi3(g, x, y),
        _ => by_oracle(g, Target::DistanceAtLeast { x, y, d }, ProblemKind::Mdi, k, None, budget),
    }
}

fn by_oracle(
    g: &Graph,
    target: Target,
    kind: ProblemKind,
    k: Option<usize>,
    regime: Option<Regime>,
    budget: &OracleBudget,
) -> Result<Solution, SolverError> {
    let method = Method::Oracle(regime);
    let found = if kind == ProblemKind::Eda {
        let Target::DiameterExactly(d) = target else { unreachable!() };
        oracle_eda(g, d, budget)?
    } else {
        let capped = match k {
            Some(k) => budget.with_max_subset_size(k),
            None => OracleBudget { max_subset_size: None, ..*budget },
        };
        min_deletion(g, target, &capped)?
    };
    Ok(match found {
        Some(f) => Solution::witness(g, f, kind.is_minimization(), method)?,
        None if k.is_some() => Solution::negative(Verdict::No, method),
        None if kind.is_minimization() => Solution::negative(Verdict::Infeasible, method),
        None => Solution::negative(Verdict::No, method),
    })
}
