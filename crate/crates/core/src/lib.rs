//! Vertex visibility in graphs: verifiers, exact and heuristic solvers for
//! x-visibility sets, explicit constructions for square grids, prisms and
//! toruses, and the known bounds collected into a report.
//!
//! Vertex ids are 0-based throughout the library; the text formats and the
//! JSON output use 1-based ids.

pub mod bitset;
pub mod bounds;
mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod solvers;
pub mod visibility;
pub mod witnesses;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use generators::FamilySpec;
pub use graph::{Graph, RootView};
pub use solvers::{Settings, SolveResult, VvResult};
