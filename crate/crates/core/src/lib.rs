//! Finite topological spaces with an operation on their open sets.
//!
//! The crate computes γ-interiors, γ-closures and γ-open families, decides
//! the separation axioms built on them, induces operations on subspaces,
//! and scans every small space for counterexamples to implications between
//! these properties.

pub mod audit;
pub mod cli;
pub mod enumerate;
pub mod gamma;
pub mod lab;
pub mod operation;
pub mod samples;
pub mod separation;
pub mod space;
pub mod spacefile;
pub mod subset;
pub mod subspace;
pub mod topology;
pub mod verdict;

pub use gamma::{ClosedConvention, GammaFamily};
pub use operation::{OperationTable, RuleExpr};
pub use separation::ClosedMode;
pub use space::Space;
pub use subset::{SetFamily, SubSet};
pub use subspace::TraceConvention;
pub use topology::Topology;
pub use verdict::{Discharge, Query, Verdict};
