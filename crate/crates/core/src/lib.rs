//! Roman, perfect Roman and unique response Roman domination.
//!
//! Checkers built on local minimality characterizations, a branch-and-reduce
//! enumerator for unique response Roman dominating functions, enumeration of
//! minimal (perfect) Roman dominating functions, solvers on split and
//! cobipartite graphs, extension solvers, hardness gadgets and an exhaustive
//! oracle for validation at small scale.

pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod roman;
pub mod solvers;

pub use enumerate::{DelayTrace, Enumeration, Enumerator, Measure, PartialState};
pub use error::{Error, Result};
pub use graph::{CobipartitePartition, Family, Graph, SplitPartition, Vertex};
pub use oracle::{Oracle, OracleAnswer, OracleMode, OracleProperty, OracleQuery};
pub use reductions::GadgetOutput;
pub use roman::{Property, RomanFunction, TwoPacking, Violation};
pub use solvers::{ExtensionInstance, SolveResult};
