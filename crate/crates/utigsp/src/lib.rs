//! Causal structure discovery from mixed observational and interventional
//! data when intervention targets are partially or completely unknown.
//!
//! The crate provides:
//!
//! - [`graph`]: DAGs, partially directed graphs, permutations, d-separation,
//!   interventional Markov equivalence, essential graphs, and covered-edge
//!   machinery.
//! - [`stats`]: Gaussian conditional-independence and conditional-invariance
//!   tests on sufficient statistics, plus population (d-separation) oracles.
//! - [`sim`]: random linear Gaussian structural equation models, shift and
//!   perfect interventions, sampling, and closed-form population moments.
//! - [`learn`]: the permutation-search learners — GSP, GSP with background
//!   knowledge, JCI-GSP, and UT-IGSP, which estimates intervention targets
//!   jointly with the graph.
//! - [`metrics`]: structural Hamming distance, equivalence-class checks,
//!   target-recovery counts, and ROC sweeps.
//! - [`harness`]: dataset bundles on disk, manifest-driven learning runs, and
//!   replicated experiment sweeps; exposed on the command line by the `utigsp`
//!   binary.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod graph;
pub mod harness;
pub mod learn;
pub mod metrics;
pub mod sim;
pub mod stats;

pub use graph::{BackgroundKnowledge, Dag, GraphError, IDag, Pdag, Permutation};
pub use learn::{LearnResult, ProblemInput, ScoreValue, SearchOpts};
pub use sim::SemModel;
pub use stats::{CiTest, InvarianceTest, SuffStat, TestConfig};
