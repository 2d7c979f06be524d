//! Exhaustive backtracking search engine for verifying the Erdős–Gyárfás
//! conjecture (every graph with minimum degree at least 3 has a cycle whose
//! length is a power of two) on graphs without long induced paths.
//!
//! The engine grows candidate graphs from a start path, connecting the newest
//! vertex to every "safe" set of earlier vertices (sets that close no
//! forbidden cycle) and attaching a pendant vertex to the highest-indexed
//! vertex of degree below 3. A branch dies when an induced path on k vertices
//! appears; a graph where every vertex has degree at least 3 is a
//! counterexample and is emitted as a machine-readable certificate. A Verified
//! run for every k up to K proves the conjecture for all graphs with no
//! induced path on K vertices.

pub mod detect;
pub mod explore;
pub mod graph;
pub mod io;
pub mod oracle;

pub use detect::{ForbiddenCycleSpec, SafeSet};
pub use explore::{
    explore, run_verification, special_search, Certificate, OutcomeKind, SearchConfig,
    SearchOutcome, SearchStats,
};
pub use graph::{Graph, MutationLog, MAX_VERTICES};
