//! Reeb graphs of PL functions and Reeb spaces of simplicial maps.

mod graph;
mod space;
mod verify;

pub use graph::{reeb_graph, ReebEdge, ReebGraph, ReebNode};
pub use space::{fiber_components_at, reeb_space, ReebComplex, Stratum, StratumRow};
pub use verify::{b1_inequality_check, verify_quotient, B1Report, ComponentB1, QuotientReport};
