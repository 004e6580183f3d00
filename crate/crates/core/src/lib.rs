//! Exact matching and domination analysis of Apollonian networks, Tower of
//! Hanoi graphs and extended Tower of Hanoi graphs.
//!
//! Every quantity is computed independently by exhaustive search
//! ([`oracle`]), by recursion and closed form ([`recurrence`]) and, where
//! possible, by explicit construction ([`structures`]). [`verify`] runs the
//! cross-checks.

mod bitset;
pub mod error;
pub mod exec;
pub mod format;
pub mod generators;
pub mod graph;
pub mod growth;
pub mod oracle;
pub mod recurrence;
pub mod report;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use generators::{FamilySpec, HanoiLabel, HanoiMethod, Method};
pub use graph::{Corner, Edge, Family, GraphStats, LabeledGraph, Peg, VertexId, VertexRole};
