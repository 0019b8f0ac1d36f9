//! Markov equivalence classes of sparse DAGs: completed PDAGs, the six edge
//! operators with their perfectness checks, and a reversible Markov chain over
//! the space of equivalence classes with a bounded edge count.
//!
//! The crate is organised around a small number of layers:
//!
//! * [`graph`] — the mixed-graph carrier (disjoint undirected and directed
//!   edge sets) with the local vertex-set queries everything else consumes.
//! * [`equiv`] — PDAG ↔ DAG ↔ completed-PDAG conversions (consistent
//!   extension, compelled-edge labeling) and the strongly-protected edge test.
//! * [`ops`] — the six operators (InsertU, DeleteU, InsertD, DeleteD, MakeV,
//!   RemoveV), their fast condition checks, and perfect operator sets.
//! * [`sampler`] — the seeded, replayable chain over classes with at most a
//!   given number of edges, in raw and Metropolis modes.
//! * [`oracle`] — brute-force enumeration of DAGs and classes at small vertex
//!   counts, exact transition matrices, and the perfectness verifier.
//! * [`text`] — the graph file format and canonical serializations.

pub mod equiv;
pub mod error;
pub mod graph;
pub mod ops;
pub mod oracle;
pub mod sampler;
pub mod text;

pub use equiv::{certify, consistent_extension, dag_to_cpdag, pdag_to_cpdag, CompletedPdag};
pub use error::{EquivError, GraphError, OpError, OracleError, ParseError, SamplerError};
pub use graph::{topological_sort, Dag, MixedGraph, MixedGraphBuilder, Vertex};
pub use ops::{perfect_operator_set, Operator, OperatorKind, OperatorSet};
