//! Recognizers, exact oracles, hardness gadgets and polynomial solvers for
//! edge deletion into tree-like graph classes: cacti, constellations,
//! caterpillars and linear forests.
//!
//! The crate is `no_std` (it needs `alloc`); the `std` feature is on by
//! default and only affects the test harness. The `serde` feature derives
//! serialization for edges, labels, certificates and reduction roles.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod chordal_cactus;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod qt_cactus;
pub mod recognize;
pub mod reduce;
pub mod solution;

pub use graph::{connected_components, girth, subdivide_twice, Edge, EdgeSet, Graph, GraphError};
pub use solution::{SolutionError, SpanningSolution};
