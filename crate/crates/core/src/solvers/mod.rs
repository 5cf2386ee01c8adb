//! Exact polynomial solvers and the dispatcher that routes each problem to
//! one of them or, for the hard and open cases, to the oracle.

mod complete;
mod da;
mod dispatch;
mod mdi3;
mod meda3;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, SolverError};
use crate::graph::{Dist, EdgeSet, Graph};
use crate::metrics::{diameter, distance};

pub use complete::{ore_max_edges, solve_complete};
pub use da::solve_da;
pub use dispatch::{solve, solve_by_oracle, solve_with};
pub use mdi3::solve_mdi3;
pub use meda3::{
    claim_paths_solution, is_relevant, relevant_path, solve_eda3, solve_mda3, solve_meda3,
    RelevantPath,
};

/// The five deletion problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// Some connected spanning subgraph of diameter at least `d`.
    Da,
    /// At most `k` deletions, diameter at least `d`.
    Mda,
    /// Some connected spanning subgraph of diameter exactly `d`.
    Eda,
    /// At most `k` deletions, diameter exactly `d`.
    Meda,
    /// At most `k` deletions, `dist(x, y) >= d`.
    Mdi,
}

impl ProblemKind {
    pub fn is_minimization(self) -> bool {
        matches!(self, ProblemKind::Mda | ProblemKind::Meda | ProblemKind::Mdi)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemKind::Da => "da",
            ProblemKind::Mda => "mda",
            ProblemKind::Eda => "eda",
            ProblemKind::Meda => "meda",
            ProblemKind::Mdi => "mdi",
        })
    }
}

impl FromStr for ProblemKind {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "da" => Ok(ProblemKind::Da),
            "mda" => Ok(ProblemKind::Mda),
            "eda" => Ok(ProblemKind::Eda),
            "meda" => Ok(ProblemKind::Meda),
            "mdi" => Ok(ProblemKind::Mdi),
            other => Err(SolverError::InvalidProblem(format!("unknown problem {other:?}"))),
        }
    }
}

/// A problem instance minus the graph.
///
/// `k = None` on a minimization kind asks for the unconstrained optimum:
/// the verdict is `Yes` whenever any deletion set works.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub d: usize,
    pub k: Option<usize>,
    pub pair: Option<(usize, usize)>,
}

impl ProblemSpec {
    pub fn new(kind: ProblemKind, d: usize) -> Self {
        ProblemSpec {
            kind,
            d,
            k: None,
            pair: None,
        }
    }

    pub fn with_budget(self, k: usize) -> Self {
        ProblemSpec { k: Some(k), ..self }
    }

    pub fn with_pair(self, x: usize, y: usize) -> Self {
        ProblemSpec {
            pair: Some((x, y)),
            ..self
        }
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if self.d == 0 {
            return Err(SolverError::InvalidProblem("d must be at least 1".into()));
        }
        match (self.kind, self.pair) {
            (ProblemKind::Mdi, None) => Err(SolverError::InvalidProblem(
                "mdi needs a vertex pair (x, y)".into(),
            )),
            (ProblemKind::Mdi, Some((x, y))) if x == y => Err(SolverError::InvalidProblem(
                "mdi needs two distinct vertices".into(),
            )),
            (kind, Some(_)) if kind != ProblemKind::Mdi => Err(SolverError::InvalidProblem(
                format!("{kind} does not take a vertex pair"),
            )),
            (kind, _) if self.k.is_some() && !kind.is_minimization() => Err(
                SolverError::InvalidProblem(format!("{kind} does not take a budget k")),
            ),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    /// Feasible in principle but not within the budget (or not at all, for
    /// the decision kinds).
    No,
    /// No deletion set of any size works.
    Infeasible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Infeasible => "infeasible",
        })
    }
}

/// Complexity regime of an instance handed to the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    NpComplete,
    NpHard,
    Open,
}

/// Which algorithm produced a [`Solution`]; serialized as its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// The input's own diameter or distance already decides the instance.
    Trivial,
    /// Complete input, answered from the extremal edge count.
    CompleteGraph,
    /// Long path plus depth-first spanning tree.
    LongPath,
    /// Common-neighbour cut for `dist(x, y) >= 3`.
    Mdi3,
    /// Best pair of the distance-three cut.
    Mda3,
    /// Structural characterization of graphs with a diameter-3 spanning subgraph.
    Eda3,
    /// Relevant-path sweep.
    Meda3,
    /// Brute force.
    Oracle(Option<Regime>),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Trivial => f.write_str("trivial"),
            Method::CompleteGraph => f.write_str("complete-graph"),
            Method::LongPath => f.write_str("long-path"),
            Method::Mdi3 => f.write_str("mdi3"),
            Method::Mda3 => f.write_str("mda3"),
            Method::Eda3 => f.write_str("eda3"),
            Method::Meda3 => f.write_str("meda3"),
            Method::Oracle(None) => f.write_str("oracle"),
            Method::Oracle(Some(Regime::NpComplete)) => f.write_str("oracle (NP-complete regime)"),
            Method::Oracle(Some(Regime::NpHard)) => f.write_str("oracle (NP-hard regime)"),
            Method::Oracle(Some(Regime::Open)) => f.write_str("oracle (open regime)"),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Answer to a [`ProblemSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub verdict: Verdict,
    /// Optimum `|F|` for the minimization kinds, when known.
    pub min_size: Option<usize>,
    pub deleted: Option<EdgeSet>,
    /// Diameter of `G - deleted`.
    pub achieved_diameter: Option<Dist>,
    /// A diametral pair of `G - deleted`.
    pub certificate: Option<(usize, usize)>,
    pub method: Method,
}

impl Solution {
    /// Positive answer backed by the deletion set `f`; `min_size` is set to
    /// `|f|` when `optimal`.
    pub fn witness(g: &Graph, f: EdgeSet, optimal: bool, method: Method) -> Result<Self, GraphError> {
        let h = g.delete_edges(&f)?;
        let diam = diameter(&h);
        Ok(Solution {
            verdict: Verdict::Yes,
            min_size: optimal.then_some(f.len()),
            deleted: Some(f),
            achieved_diameter: Some(diam.value),
            certificate: diam.pair,
            method,
        })
    }

    pub fn negative(verdict: Verdict, method: Method) -> Self {
        Solution {
            verdict,
            min_size: None,
            deleted: None,
            achieved_diameter: None,
            certificate: None,
            method,
        }
    }

    /// Downgrades a feasible optimum that exceeds `k` to `No`.
    pub fn within_budget(mut self, k: Option<usize>) -> Self {
        if let (Verdict::Yes, Some(k), Some(size)) = (self.verdict, k, self.min_size) {
            if size > k {
                self.verdict = Verdict::No;
            }
        }
        self
    }
}

/// Outcome of checking a proposed deletion set against a problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub valid: bool,
    pub reason: Option<String>,
    pub achieved_diameter: Option<Dist>,
}

/// Checks `f` directly: subset of `E(G)`, `G - F` connected, the diameter
/// (or distance) condition, and `|F| <= k` when a budget is given.
pub fn check_witness(g: &Graph, spec: &ProblemSpec, f: &EdgeSet) -> Result<WitnessCheck, SolverError> {
    spec.validate()?;
    let invalid = |reason: String, achieved| {
        Ok(WitnessCheck {
            valid: false,
            reason: Some(reason),
            achieved_diameter: achieved,
        })
    };
    let h = match g.delete_edges(f) {
        Ok(h) => h,
        Err(GraphError::MissingEdge(e)) => return invalid(format!("{e} is not an edge"), None),
        Err(e) => return Err(e.into()),
    };
    let diam = diameter(&h).value;
    if !diam.is_finite() {
        return invalid("disconnected".into(), Some(diam));
    }
    if let Some(k) = spec.k {
        if f.len() > k {
            return invalid(format!("|F| = {} exceeds k = {k}", f.len()), Some(diam));
        }
    }
    let d = Dist::Finite(spec.d);
    let ok = match spec.kind {
        ProblemKind::Da | ProblemKind::Mda => diam >= d,
        ProblemKind::Eda | ProblemKind::Meda => diam == d,
        ProblemKind::Mdi => {
            let (x, y) = spec.pair.expect("validated");
            let dist = distance(&h, x, y)?;
            if dist < d {
                return invalid(format!("dist({x}, {y}) = {dist} < {}", spec.d), Some(diam));
            }
            true
        }
    };
    if !ok {
        let rel = if matches!(spec.kind, ProblemKind::Da | ProblemKind::Mda) {
            "below"
        } else {
            "not equal to"
        };
        return invalid(format!("diameter {diam} {rel} {}", spec.d), Some(diam));
    }
    Ok(WitnessCheck {
        valid: true,
        reason: None,
        achieved_diameter: Some(diam),
    })
}
