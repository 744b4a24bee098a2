//! Feedback vertex set problems on edge-colored multigraphs.
//!
//! A vertex set is a *dual feedback vertex set* of an edge-bicolored graph when
//! deleting it leaves both the blue and the red subgraph acyclic; with `h`
//! colors the same notion is a *multi feedback vertex set*. This crate holds
//! the algorithmic core: the multigraph type, the reduction rules, compact
//! representations of single-color solution families, the exact solvers and
//! minimal-solution enumerators, and brute-force oracles.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod adjacency;
pub mod compact;
pub mod dfvs;
mod error;
pub mod family;
pub mod graph;
pub mod mfvs;
pub mod oracle;
pub mod reductions;
mod subsets;

pub use adjacency::AdjacencyGraph;
pub use compact::CompactRepresentation;
pub use error::Error;
pub use family::{Family, VertexSet};
pub use graph::{Color, ColorDegree, Cycle, Digraph, Edge, EdgeColoredGraph, VertexId, BLUE, RED};
pub use reductions::{MonochromaticPath, ReducedInstance, VertexClassification};

pub type Result<T, E = Error> = core::result::Result<T, E>;
