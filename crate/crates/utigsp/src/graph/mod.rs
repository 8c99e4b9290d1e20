//! Directed acyclic graphs, partially directed graphs, permutations, and the
//! equivalence-class machinery built on them: d-separation, (interventional)
//! Markov equivalence, essential graphs, covered-edge reversals, and
//! Chickering sequences.
//!
//! All types are immutable after construction; every operation returning a
//! modified graph returns a fresh value. Nodes are `0..p`.

mod chickering;
mod dag;
mod dsep;
mod equiv;
mod idag;
mod pdag;
mod perm;
pub mod text;

pub use chickering::{apply_edge_operation, chickering_sequence};
pub use dag::Dag;
pub use dsep::d_separated;
pub use equiv::{i_essential_graph, i_markov_equivalent, markov_equivalent, meek_closure};
pub use idag::{BackgroundKnowledge, IDag};
pub use pdag::{EdgeStatus, Pdag};
pub use perm::Permutation;

/// Errors raised by graph construction and graph algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("node {node} out of range for graph on {p} nodes")]
    NodeOutOfRange { node: usize, p: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge set contains a directed cycle")]
    Cycle,
    #[error("edge {0} -> {1} not present")]
    MissingEdge(usize, usize),
    #[error("node sets must be pairwise disjoint")]
    OverlappingSets,
    #[error("graphs have different node counts ({0} vs {1})")]
    NodeCountMismatch(usize, usize),
    #[error("graphs have different setting counts ({0} vs {1})")]
    SettingCountMismatch(usize, usize),
    #[error("sequence {0:?} is not a permutation of 0..{1}")]
    InvalidPermutation(Vec<usize>, usize),
    #[error("pair {0} -- {1} appears as both directed and undirected")]
    MixedEdge(usize, usize),
    #[error("order partition is invalid: {0}")]
    InvalidPartition(String),
    #[error("the target graph is not an independence map of the source")]
    NotAnImap,
    #[error("graphs are equal; no edge operation applies")]
    GraphsEqual,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
