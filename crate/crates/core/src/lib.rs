//! Diameter augmentation by edge deletion.
//!
//! Given a connected graph, can deleting edges (keeping it connected) make
//! its diameter equal to, or at least, a fixed `d`, optionally using at most
//! `k` deletions? This crate provides
//!
//! * graph primitives ([`graph`], [`metrics`], [`paths`]),
//! * a brute-force [`oracle`] that is the ground truth for everything else,
//! * exact polynomial [`solvers`] for the tractable cases and a dispatcher,
//! * generators for the Vertex Cover hardness gadgets in [`reductions`],
//! * the known complexity landscape in [`complexity`].

mod bitgraph;
pub mod complexity;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod paths;
pub mod reductions;
pub mod solvers;

pub use error::{GraphError, OracleError, ReductionError, SolverError};
pub use graph::{Dist, Edge, EdgeSet, Graph};
pub use solvers::{solve, Method, ProblemKind, ProblemSpec, Solution, Verdict};
pub use oracle::OracleBudget;

