//! Saturated subgraphs of the hypercube for forbidden trees: constructions,
//! an exhaustive saturation verifier, and bound evaluators.

pub mod bounds;
pub mod codes;
pub mod constructions;
pub mod cube;
pub mod error;
pub mod io;
pub mod embed;
pub mod matching;
pub mod saturation;
pub mod tree;

pub use cube::{CubeAutomorphism, CubeSubgraph, Edge, Vertex};
pub use error::{Error, Result};
pub use tree::Tree;
