//! Structural analysis of graphs with girth `2l` and no even hole longer
//! than `2l`: class membership, holes and theta subgraphs, the jump
//! taxonomy over a hole, decomposition-based 3-colouring, and audits that
//! check the structural lemmas of the class on graph corpora.

pub mod audit;
pub mod cli;
pub mod coloring;
pub mod cycles;
pub mod generators;
pub mod graph;
pub mod io;
pub mod jumps;
pub mod theta;

pub use cycles::{enumerate_holes, girth, is_member, Hole, MembershipVerdict};
pub use graph::{CutCertificate, CutKind, Graph, GraphError};
