//! Gadget constructions and certificate translators for the hardness
//! reductions, plus a harness for the structural Hamiltonian-path
//! equivalence over predicate-defined classes.

mod caterpillar;
mod constellation;
mod pi;
mod pip3;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use caterpillar::{
    caterpillar_to_hampath, hampath_to_caterpillar_instance, hampath_to_caterpillar_solution,
};
pub use constellation::{
    constellation_to_domset, domset_to_constellation, min_constellation_deletion,
};
pub use pi::{
    pi_deletion_equiv_hampath, verify_pi_conditions, ClassPredicate, Equivalence, FnPredicate,
    LabelPredicate, PiCondition, PiProbe, PiReport, PiViolation,
};
pub use pip3::{cactus_to_pip3_solution, pip3_solution_to_cactus, pip3_to_cactus_instance};

use crate::graph::{Edge, Graph};
use crate::oracle::OracleError;
use crate::recognize::{ClassLabel, RecognizeError};
use crate::solution::SolutionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "kebab-case")
)]
pub enum ReductionKind {
    Pip3ToCactus,
    HampathToCaterpillar,
}

impl ReductionKind {
    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Pip3ToCactus => "pip3-to-cactus",
            ReductionKind::HampathToCaterpillar => "hampath-to-caterpillar",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            ReductionKind::Pip3ToCactus,
            ReductionKind::HampathToCaterpillar,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

/// Where a gadget vertex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum VertexRole {
    Source(usize),
    X,
    Y,
    XPrime,
    YPrime,
    /// First inner vertex of the subdivided source edge with this index.
    SubdivU {
        edge: usize,
    },
    /// Second inner vertex, adjacent to the larger endpoint.
    SubdivV {
        edge: usize,
    },
}

/// Where a gadget edge comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum EdgeRole {
    /// Copy of the source edge with this index.
    Source(usize),
    /// Source vertex joined to `x` or `y`.
    ToApex(usize),
    /// One of `xy`, `xx'`, `x'y'`, `yy'`.
    Apex,
    /// Piece of the subdivided source edge with this index; `part` is 0, 1
    /// or 2 from the smaller endpoint.
    Subdivision { edge: usize, part: u8 },
}

/// A gadget with its budget and provenance back to the source instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub source: Graph,
    pub source_budget: Option<i64>,
    pub gadget: Graph,
    /// Maximum number of deletions allowed in the gadget.
    pub budget: i64,
    /// Set when the source is a no-instance for a reason visible before
    /// construction (a vertex count not divisible by three); the budget is
    /// then -1.
    pub trivially_negative: bool,
    /// Indexed by gadget vertex.
    pub vertex_roles: Vec<VertexRole>,
    /// Indexed by gadget edge (canonical order).
    pub edge_roles: Vec<EdgeRole>,
}

impl ReductionInstance {
    /// Gadget vertex with the given role.
    pub fn vertex_with_role(&self, role: VertexRole) -> Option<usize> {
        self.vertex_roles.iter().position(|&r| r == role)
    }

    /// Checks that the stored roles and budget match a fresh construction.
    pub fn is_consistent(&self) -> bool {
        let fresh = match self.kind {
            ReductionKind::Pip3ToCactus => pip3_to_cactus_instance(&self.source).ok(),
            ReductionKind::HampathToCaterpillar => {
                Some(hampath_to_caterpillar_instance(&self.source))
            }
        };
        fresh.is_some_and(|f| {
            f.gadget == self.gadget
                && f.budget == self.budget
                && f.trivially_negative == self.trivially_negative
                && f.vertex_roles == self.vertex_roles
                && f.edge_roles == self.edge_roles
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceError {
    NotBipartite {
        vertex: usize,
        odd_cycle: Vec<usize>,
    },
    DegreeTooHigh {
        vertex: usize,
        degree: usize,
    },
    TriviallyNegative,
    InvalidPartition(&'static str),
    InvalidPath,
    NotDominating {
        vertex: usize,
    },
    InvalidVertex {
        vertex: usize,
    },
    WrongHost,
    WrongLabel {
        expected: ClassLabel,
        found: ClassLabel,
    },
    BudgetExceeded {
        deletions: usize,
        budget: i64,
    },
    /// A structure the correctness argument rules out; indicates a bug.
    Defensive(String),
    Solution(SolutionError),
    Oracle(OracleError),
    Recognize(RecognizeError),
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::NotBipartite { vertex, odd_cycle } => {
                write!(
                    f,
                    "input is not bipartite: vertex {vertex} lies on odd cycle {odd_cycle:?}"
                )
            }
            ReduceError::DegreeTooHigh { vertex, degree } => {
                write!(
                    f,
                    "input is not subcubic: vertex {vertex} has degree {degree}"
                )
            }
            ReduceError::TriviallyNegative => {
                f.write_str("instance is trivially negative: vertex count not divisible by 3")
            }
            ReduceError::InvalidPartition(why) => write!(f, "invalid partition: {why}"),
            ReduceError::InvalidPath => f.write_str("not a Hamiltonian path of the source"),
            ReduceError::NotDominating { vertex } => {
                write!(f, "not a dominating set: vertex {vertex} is undominated")
            }
            ReduceError::InvalidVertex { vertex } => {
                write!(f, "vertex {vertex} out of range or repeated")
            }
            ReduceError::WrongHost => f.write_str("solution is for a different host graph"),
            ReduceError::WrongLabel { expected, found } => {
                write!(f, "expected a {expected} solution, found {found}")
            }
            ReduceError::BudgetExceeded { deletions, budget } => {
                write!(f, "{deletions} deletions exceed the budget {budget}")
            }
            ReduceError::Defensive(why) => write!(f, "unexpected structure: {why}"),
            ReduceError::Solution(e) => e.fmt(f),
            ReduceError::Oracle(e) => e.fmt(f),
            ReduceError::Recognize(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ReduceError {}

impl From<SolutionError> for ReduceError {
    fn from(e: SolutionError) -> Self {
        ReduceError::Solution(e)
    }
}

impl From<OracleError> for ReduceError {
    fn from(e: OracleError) -> Self {
        ReduceError::Oracle(e)
    }
}

impl From<RecognizeError> for ReduceError {
    fn from(e: RecognizeError) -> Self {
        ReduceError::Recognize(e)
    }
}

fn check_solution(
    sol: &crate::solution::SpanningSolution,
    host: &Graph,
    label: ClassLabel,
    budget: i64,
) -> Result<(), ReduceError> {
    if sol.host() != host {
        return Err(ReduceError::WrongHost);
    }
    if sol.label() != label {
        return Err(ReduceError::WrongLabel {
            expected: label,
            found: sol.label(),
        });
    }
    if !sol.verify() {
        return Err(ReduceError::Defensive(
            "solution fails re-verification".into(),
        ));
    }
    if sol.deletions() as i64 > budget {
        return Err(ReduceError::BudgetExceeded {
            deletions: sol.deletions(),
            budget,
        });
    }
    Ok(())
}

fn edge_roles_for(gadget: &Graph, role: impl Fn(Edge) -> EdgeRole) -> Vec<EdgeRole> {
    gadget.edges().iter().map(|&e| role(e)).collect()
}
