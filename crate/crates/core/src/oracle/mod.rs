//! Exponential exact solvers used as ground truth, plus general maximum
//! matching.
//!
//! All of them are deterministic: ties are broken towards smaller vertex
//! ids and earlier edges in canonical order.

mod domset;
mod hampath;
mod hypertree;
mod matching;
mod pip3;
mod spanning;

use core::fmt;

pub use domset::{is_dominating, min_dominating_set};
pub use hampath::{hamiltonian_path, is_hamiltonian_path};
pub use hypertree::max_spanning_cactus_by_cycles;
pub use matching::{is_matching, max_matching};
pub use pip3::{check_p3_partition, partition_into_p3, P3Block, P3Mode};
pub use spanning::{
    dominating_path, exists_spanning_subgraph_with_edges, max_spanning_cactus_by_edges,
    max_spanning_in_class, max_spanning_with_predicate, Pred,
};

use crate::recognize::RecognizeError;
use crate::solution::SolutionError;

/// Size ceilings for the exponential solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub hamiltonian_vertices: usize,
    pub domination_vertices: usize,
    pub p3_vertices: usize,
    /// Raw subset enumeration for classes that are not closed under edge deletion.
    pub subset_edges: usize,
    /// Branch-and-bound over edges for classes closed under edge deletion.
    pub pruned_edges: usize,
    pub hyperedges: usize,
    /// Vertex-subset dynamic program over cycle families.
    pub cycle_dp_vertices: usize,
    /// Edge subsets examined by the fixed-size search.
    pub max_combinations: u64,
    /// Search-tree nodes for the spine (dominating path) search.
    pub search_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            hamiltonian_vertices: 22,
            domination_vertices: 24,
            p3_vertices: 21,
            subset_edges: 24,
            pruned_edges: 30,
            hyperedges: 24,
            cycle_dp_vertices: 16,
            max_combinations: 20_000_000,
            search_nodes: 50_000_000,
        }
    }
}

impl Limits {
    /// Ceilings large enough for every sweep in the acceptance suite.
    pub fn generous() -> Self {
        Limits {
            pruned_edges: 64,
            hyperedges: 128,
            ..Limits::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    Infeasible(&'static str),
    Predicate(alloc::string::String),
    Recognize(RecognizeError),
    Solution(SolutionError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::SizeLimit { what, size, limit } => {
                write!(f, "size limit: {what} is {size}, limit {limit}")
            }
            OracleError::Infeasible(why) => write!(f, "infeasible: {why}"),
            OracleError::Predicate(why) => write!(f, "predicate failed: {why}"),
            OracleError::Recognize(e) => e.fmt(f),
            OracleError::Solution(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<RecognizeError> for OracleError {
    fn from(e: RecognizeError) -> Self {
        OracleError::Recognize(e)
    }
}

impl From<SolutionError> for OracleError {
    fn from(e: SolutionError) -> Self {
        OracleError::Solution(e)
    }
}

pub(crate) fn within(what: &'static str, size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::SizeLimit { what, size, limit })
    } else {
        Ok(())
    }
}
