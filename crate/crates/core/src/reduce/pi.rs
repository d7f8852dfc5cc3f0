use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;

use crate::generate::{gnp, labeled_catalog};
use crate::graph::{families, EdgeSet, Graph};
use crate::oracle::{exists_spanning_subgraph_with_edges, hamiltonian_path, Limits, OracleError};
use crate::recognize::{belongs, find_claw, find_even_hole, is_bipartite, ClassLabel};

/// A graph class given by a membership test.
pub trait ClassPredicate {
    fn name(&self) -> String;
    fn contains(&self, g: &Graph) -> Result<bool, OracleError>;
}

/// A built-in recognizer used as a predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelPredicate(pub ClassLabel);

impl ClassPredicate for LabelPredicate {
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    fn contains(&self, g: &Graph) -> Result<bool, OracleError> {
        Ok(belongs(g, self.0)?)
    }
}

/// A named closure used as a predicate.
pub struct FnPredicate<F> {
    pub name: String,
    pub test: F,
}

impl<F> FnPredicate<F>
where
    F: Fn(&Graph) -> Result<bool, OracleError>,
{
    pub fn new(name: impl Into<String>, test: F) -> Self {
        FnPredicate {
            name: name.into(),
            test,
        }
    }
}

impl<F> ClassPredicate for FnPredicate<F>
where
    F: Fn(&Graph) -> Result<bool, OracleError>,
{
    fn name(&self) -> String {
        self.name.clone()
    }

    fn contains(&self, g: &Graph) -> Result<bool, OracleError> {
        (self.test)(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PiCondition {
    /// Every path belongs to the class.
    ContainsPaths,
    /// No member contains an induced claw.
    ClawFree,
    /// No member contains an even hole.
    EvenHoleFree,
}

impl PiCondition {
    pub const ALL: [PiCondition; 3] = [
        PiCondition::ContainsPaths,
        PiCondition::ClawFree,
        PiCondition::EvenHoleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PiCondition::ContainsPaths => "contains-paths",
            PiCondition::ClawFree => "claw-free",
            PiCondition::EvenHoleFree => "even-hole-free",
        }
    }
}

/// A probed graph breaking a condition. `witness` is empty for a missing
/// path, the center followed by three leaves for a claw, and the cycle for
/// an even hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiViolation {
    pub condition: PiCondition,
    pub graph: Graph,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiReport {
    pub predicate: String,
    pub n_max: usize,
    pub probed: usize,
    pub members: usize,
    /// First violation found for each failing condition.
    pub violations: Vec<PiViolation>,
}

impl PiReport {
    pub fn holds(&self, c: PiCondition) -> bool {
        self.violation(c).is_none()
    }

    pub fn violation(&self, c: PiCondition) -> Option<&PiViolation> {
        self.violations.iter().find(|v| v.condition == c)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Which graphs `verify_pi_conditions` looks at besides the paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PiProbe {
    /// All labeled graphs on up to this many vertices.
    pub exhaustive_up_to: usize,
    /// Random graphs drawn per vertex count above the exhaustive range.
    pub random_samples: usize,
}

impl Default for PiProbe {
    fn default() -> Self {
        PiProbe {
            exhaustive_up_to: 7,
            random_samples: 200,
        }
    }
}

struct Probe<'a> {
    pi: &'a dyn ClassPredicate,
    report: PiReport,
}

impl Probe<'_> {
    fn record(&mut self, condition: PiCondition, g: &Graph, witness: Vec<usize>) {
        if self.report.holds(condition) {
            self.report.violations.push(PiViolation {
                condition,
                graph: g.clone(),
                witness,
            });
        }
    }

    fn member(&mut self, g: &Graph) -> Result<bool, OracleError> {
        self.report.probed += 1;
        if !self.pi.contains(g)? {
            return Ok(false);
        }
        self.report.members += 1;
        if self.report.holds(PiCondition::ClawFree) {
            if let Some((c, leaves)) = find_claw(g) {
                self.record(
                    PiCondition::ClawFree,
                    g,
                    [c, leaves[0], leaves[1], leaves[2]].to_vec(),
                );
            }
        }
        if self.report.holds(PiCondition::EvenHoleFree) {
            if let Some(hole) = find_even_hole(g) {
                self.record(PiCondition::EvenHoleFree, g, hole);
            }
        }
        Ok(true)
    }
}

/// Probes the three conditions on paths up to `n_max`, every labeled graph
/// up to `probe.exhaustive_up_to` vertices (capped at `n_max`), and random
/// graphs for the remaining sizes.
pub fn verify_pi_conditions<R: Rng + ?Sized>(
    pi: &dyn ClassPredicate,
    n_max: usize,
    probe: &PiProbe,
    rng: &mut R,
) -> Result<PiReport, OracleError> {
    let mut p = Probe {
        pi,
        report: PiReport {
            predicate: pi.name(),
            n_max,
            probed: 0,
            members: 0,
            violations: Vec::new(),
        },
    };
    for n in 1..=n_max {
        let path = families::path(n);
        if !p.member(&path)? {
            p.record(PiCondition::ContainsPaths, &path, Vec::new());
        }
    }
    let exhaustive = probe.exhaustive_up_to.min(n_max);
    for n in 1..=exhaustive {
        for g in labeled_catalog(n) {
            p.member(&g)?;
        }
    }
    for n in exhaustive + 1..=n_max {
        for _ in 0..probe.random_samples {
            let density = rng.gen_range(0.05..0.6);
            p.member(&gnp(n, density, rng))?;
        }
    }
    Ok(p.report)
}

/// Outcome of checking both sides of the equivalence between a Hamiltonian
/// path and a spanning class member with `|V| - 1` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Agree {
        hamiltonian: bool,
        path: Option<Vec<usize>>,
        subgraph: Option<EdgeSet>,
    },
    /// Only reachable when the predicate breaks the conditions.
    Disagree {
        path: Option<Vec<usize>>,
        subgraph: Option<EdgeSet>,
    },
}

impl Equivalence {
    pub fn agrees(&self) -> bool {
        matches!(self, Equivalence::Agree { .. })
    }
}

/// Decides both sides on a bipartite `g` independently: a Hamiltonian path
/// by the path oracle, and a spanning member of `pi` with `|V| - 1` edges by
/// subset enumeration.
pub fn pi_deletion_equiv_hampath(
    g: &Graph,
    pi: &dyn ClassPredicate,
    limits: &Limits,
) -> Result<Equivalence, OracleError> {
    if !is_bipartite(g).is_accepted() {
        return Err(OracleError::Infeasible("input graph is not bipartite"));
    }
    let path = hamiltonian_path(g, limits)?;
    let subgraph = if g.n() == 0 {
        None
    } else {
        let mut pred = |h: &Graph| pi.contains(h);
        exists_spanning_subgraph_with_edges(g, &mut pred, g.n() - 1, limits)?
    };
    Ok(if path.is_some() == subgraph.is_some() {
        Equivalence::Agree {
            hamiltonian: path.is_some(),
            path,
            subgraph,
        }
    } else {
        Equivalence::Disagree { path, subgraph }
    })
}
