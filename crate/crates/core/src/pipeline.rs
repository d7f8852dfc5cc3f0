//! Options and errors shared by the chordal and quasi-threshold cactus
//! solvers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Edge;
use crate::oracle::OracleError;
use crate::recognize::{Obstruction, RecognizeError};
use crate::solution::SolutionError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CactusOptions {
    /// Accept disconnected inputs and return a forest of cacti.
    pub forest: bool,
    /// Compare the edge count with the exact oracle before returning.
    pub cross_check: bool,
}

impl CactusOptions {
    pub fn forest() -> Self {
        CactusOptions {
            forest: true,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineError {
    /// The input is outside the class the solver is for.
    WrongClass {
        expected: &'static str,
        obstruction: Obstruction,
    },
    Disconnected {
        components: usize,
    },
    /// A cross pair of the declared join is not an edge.
    NotJoin {
        missing: Edge,
    },
    /// The two sides do not partition the vertex set.
    InvalidSides,
    WrongHost,
    /// The solver and the oracle disagree on the optimum.
    Suboptimal {
        found: usize,
        optimum: usize,
    },
    /// A structure the correctness argument rules out; indicates a bug.
    Defensive(String),
    Oracle(OracleError),
    Solution(SolutionError),
    Recognize(RecognizeError),
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::WrongClass {
                expected,
                obstruction,
            } => {
                write!(f, "input is not {expected}: {obstruction:?}")
            }
            PipelineError::Disconnected { components } => {
                write!(
                    f,
                    "input has {components} components; a connected graph is required"
                )
            }
            PipelineError::NotJoin { missing } => {
                write!(f, "not a join: cross pair {missing} is missing")
            }
            PipelineError::InvalidSides => {
                f.write_str("the two sides do not partition the vertices")
            }
            PipelineError::WrongHost => f.write_str("solution is for a different host graph"),
            PipelineError::Suboptimal { found, optimum } => {
                write!(f, "solver kept {found} edges but the optimum is {optimum}")
            }
            PipelineError::Defensive(why) => write!(f, "unexpected structure: {why}"),
            PipelineError::Oracle(e) => e.fmt(f),
            PipelineError::Solution(e) => e.fmt(f),
            PipelineError::Recognize(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for PipelineError {}

impl From<OracleError> for PipelineError {
    fn from(e: OracleError) -> Self {
        PipelineError::Oracle(e)
    }
}

impl From<SolutionError> for PipelineError {
    fn from(e: SolutionError) -> Self {
        PipelineError::Solution(e)
    }
}

impl From<RecognizeError> for PipelineError {
    fn from(e: RecognizeError) -> Self {
        PipelineError::Recognize(e)
    }
}

/// Cycles of a cactus or forest-of-cacti certificate, in cyclic order.
pub(crate) fn certificate_cycles(
    sol: &crate::solution::SpanningSolution,
) -> Result<Vec<Vec<usize>>, PipelineError> {
    match sol.certificate().witness() {
        Some(crate::recognize::Witness::Cycles { cycles, .. }) => Ok(cycles.clone()),
        _ => Err(PipelineError::Defensive(
            "cactus certificate without cycles".into(),
        )),
    }
}
