//! Exact tools for Hamiltonian cycles in balanced k-partite graphs.
//!
//! The crate covers four layers:
//!
//! * [`arithmetic`]: the sharp minimum-degree threshold `D(n, k)`, its
//!   comparison with the older rational bound and the numerical facts the
//!   threshold relies on, all in exact integer/rational arithmetic;
//! * [`graph`]: the balanced k-partite graph model (packed adjacency,
//!   connectivity, independence number, graph6/DOT I/O);
//! * [`constructions`] and [`solver`]: the extremal families and an exact
//!   Hamiltonian-cycle / longest-cycle solver with checkable certificates;
//! * [`conditions`] and [`harness`]: the sufficient-condition predicates and
//!   the exhaustive / randomized verification runs producing JSON reports.

pub mod arithmetic;
pub mod conditions;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod solver;

pub use arithmetic::{
    cfgjl_bound, check_domcycle_threshold, check_eq4_identity, classify_rounding, is_exception,
    required_degree, theorem_threshold, Rounding, ThresholdProfile,
};
pub use error::{Error, Result};
pub use graph::{CycleCertificate, KPartiteGraph, VertexSet};
