//! Vertex-cover heuristics (edge deletion, maximum-degree greedy), exact
//! oracles, ratio recognition and the gadget reductions built on them.

mod bits;
pub mod error;
pub mod exact;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod heuristics;
pub mod io;
pub mod ratio;
pub mod reductions;

pub use error::{Error, Result};
pub use exact::{Budget, Cover, Matching};
pub use gadgets::{GadgetLayout, GadgetSpec};
pub use graph::{Graph, InducedSubgraph, Vertex, VertexSet};
pub use heuristics::{Algorithm, Choice, HeuristicTrace, Policy};
pub use ratio::{Membership, Ratio};
pub use reductions::{ReductionArtifacts, Role};
