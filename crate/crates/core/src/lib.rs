//! H-graphs: intersection graphs of connected subgraphs of a subdivided
//! pattern graph H. Recognition, optimization, treewidth and separator
//! routines, plus gadget builders, all checked against one verifier.

pub mod error;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{
    canonical_subdivision, connected_components, verify_representation, Graph, HostModel, Report,
    Representation, Violation,
};
pub mod bits;
pub mod chordal;
pub mod listcolor;
pub mod oracle;
pub mod star;
pub mod order;
pub mod tree;
pub mod domination;
pub mod constructions;
pub mod clique;
pub mod treewidth;
pub mod separators;
pub mod cli;
