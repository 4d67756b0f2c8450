//! Exact coalition theory for small graphs: dominating sets, coalition
//! partitions, coalition numbers and counts, coalition graphs, the H*
//! realization of any graph as a coalition graph, and exhaustive sweeps
//! that check the known bounds on every small graph.

pub mod error;
pub mod graph;
pub mod limits;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use limits::Limits;
pub mod domination;
pub mod partition;

pub use partition::Partition;
pub mod coalition;
pub mod hstar;
pub mod harness;
