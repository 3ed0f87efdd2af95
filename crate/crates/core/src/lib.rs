//! Zero forcing, Grundy domination sequences and the uniqueness questions
//! around them: exact exhaustive searches for small graphs, the polynomial
//! forest recognizers, and a harness that cross-checks the two.

pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod par;
pub mod path_cover;
pub mod recognizers;
pub mod sequences;
pub mod tree_iso;
pub mod zero_forcing;

pub use error::{Error, Result};
pub use graph::Graph;
pub use par::Execution;
pub use recognizers::{Certificate, Property, Target, Verdict, Witness};
pub use sequences::SequenceKind;
