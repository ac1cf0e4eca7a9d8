//! Semi-transitive orientations of undirected graphs.
//!
//! An orientation is semi-transitive when it is acyclic and has no shortcut:
//! a directed path `v0 -> ... -> vk` with `k >= 3`, an arc `v0 -> vk`, and some
//! pair `vi, vj` on the path that is not adjacent. A graph admits such an
//! orientation exactly when it is word-representable.
//!
//! The crate provides graph families, a shortcut detector that returns
//! checkable certificates, a complete search solver with cycle-based
//! propagation, explicit constructions, and a replayer for proof scripts.

mod bitset;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod orientation;
pub mod proofscript;
pub mod solver;

pub use bitset::BitMatrix;
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Coloring, DegreeProfile, Girth, Graph};
pub use orientation::{
    verify_certificate, Acyclicity, Orientation, PartialOrientation, PeelRule, Peeling, ReachClosure,
    ShortcutCertificate, Verdict,
};
pub use solver::{solve, BranchHeuristic, SolveResult, SolveStats, SolverConfig};
