//! Toll walk transit functions of graphs: computation, betweenness axioms,
//! graph class recognition, exhaustive theorem checks, and first-order
//! non-definability gadgets.

pub mod axioms;
pub mod bitset;
pub mod catalog;
pub mod classes;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod induced;
pub mod io;
pub mod nondef;
pub mod par;
pub mod tollwalk;
pub mod transit;

pub use axioms::{check_axiom, check_axioms, AxiomId, AxiomVerdict};
pub use bitset::VertexSet;
pub use graph::{Graph, GraphError, Vertex};
pub use par::Exec;
pub use tollwalk::{toll_interval, toll_interval_oracle, toll_transit};
pub use transit::{TransitError, TransitFunction};
