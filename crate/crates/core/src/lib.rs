//! Extremal graph constructions, triangle counting, exact triangle covering
//! numbers, and exhaustive checkers for Mantel/Turán-type statements on small
//! graphs.

pub mod cli;
pub mod counting;
pub mod covering;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
mod graph6;
pub mod iso;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::MAX_GRAPH6_VERTICES;
