//! JSON documents read and written by the command-line tool.
//!
//! Edges are `[u, v]` pairs with `u < v`. Class labels use the kebab-case
//! names (`forest-of-cacti`); certificates are objects `{label, verdict}`
//! whose verdict is `{"accept": witness}` or `{"reject": obstruction}`,
//! with witnesses and obstructions tagged as `{"kind": ..., "data": ...}`.

use serde::{Deserialize, Serialize};

use treelike_core::oracle::P3Block;
use treelike_core::recognize::{ClassCertificate, ClassLabel};
use treelike_core::reduce::{
    EdgeRole, Equivalence, PiReport, ReductionInstance, ReductionKind, VertexRole,
};
use treelike_core::{Edge, EdgeSet, Graph, GraphError, SpanningSolution};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl GraphDoc {
    pub fn new(g: &Graph) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().to_vec(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().map(|e| (e.u, e.v)))
    }
}

/// A spanning subgraph in a target class. `n` and `m` describe the host;
/// `extras` carries solver-specific structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub label: ClassLabel,
    pub method: String,
    pub n: usize,
    pub m: usize,
    pub kept: Vec<Edge>,
    pub deletions: usize,
    pub certificate: ClassCertificate,
    #[serde(default, skip_serializing_if = "Extras::is_empty")]
    pub extras: Extras,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extras {
    /// Triangles chosen by the chordal pipeline.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangles: Option<Vec<[usize; 3]>>,
    /// Edges added by the chordal pipeline to connect components.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub joins: Option<Vec<Edge>>,
    /// Star centers of the quasi-threshold solver, one per component.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centers: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<Edge>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dominating_set: Option<Vec<usize>>,
    /// Vertex names when the input used the labeled format.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Extras {
    pub fn is_empty(&self) -> bool {
        *self == Extras::default()
    }
}

impl SolutionDoc {
    pub fn new(sol: &SpanningSolution, method: &str, extras: Extras) -> Self {
        SolutionDoc {
            label: sol.label(),
            method: method.to_string(),
            n: sol.host().n(),
            m: sol.host().m(),
            kept: sol.kept().as_slice().to_vec(),
            deletions: sol.deletions(),
            certificate: sol.certificate().clone(),
            extras,
        }
    }

    /// Rebuilds the solution on `host`, re-running the recognizer. The
    /// stored certificate is not trusted.
    pub fn to_solution(&self, host: &Graph) -> Result<SpanningSolution, SchemaError> {
        if host.n() != self.n || host.m() != self.m {
            return Err(SchemaError::WrongHost);
        }
        let kept = EdgeSet::within(host, self.kept.iter().map(|e| (e.u, e.v)))?;
        let sol = SpanningSolution::new(host.clone(), kept, self.label)?;
        if sol.deletions() != self.deletions {
            return Err(SchemaError::Inconsistent(
                "deletion count does not match the kept edges",
            ));
        }
        Ok(sol)
    }
}

/// A reduction gadget with its budget and provenance maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub kind: ReductionKind,
    pub source: GraphDoc,
    pub source_budget: Option<i64>,
    pub gadget: GraphDoc,
    pub budget: i64,
    pub trivially_negative: bool,
    pub vertex_roles: Vec<VertexRole>,
    pub edge_roles: Vec<EdgeRole>,
}

impl InstanceDoc {
    pub fn new(inst: &ReductionInstance) -> Self {
        InstanceDoc {
            kind: inst.kind,
            source: GraphDoc::new(&inst.source),
            source_budget: inst.source_budget,
            gadget: GraphDoc::new(&inst.gadget),
            budget: inst.budget,
            trivially_negative: inst.trivially_negative,
            vertex_roles: inst.vertex_roles.clone(),
            edge_roles: inst.edge_roles.clone(),
        }
    }

    /// Rebuilds the instance and checks it against a fresh construction.
    pub fn to_instance(&self) -> Result<ReductionInstance, SchemaError> {
        let inst = ReductionInstance {
            kind: self.kind,
            source: self.source.to_graph()?,
            source_budget: self.source_budget,
            gadget: self.gadget.to_graph()?,
            budget: self.budget,
            trivially_negative: self.trivially_negative,
            vertex_roles: self.vertex_roles.clone(),
            edge_roles: self.edge_roles.clone(),
        };
        if inst.is_consistent() {
            Ok(inst)
        } else {
            Err(SchemaError::Inconsistent(
                "instance does not match a fresh construction",
            ))
        }
    }
}

/// A certificate for a source problem of a reduction, or a solution of its
/// target problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CertificateDoc {
    HamiltonianPath { path: Vec<usize> },
    P3Partition { blocks: Vec<[usize; 3]> },
    DominatingSet { set: Vec<usize> },
    Solution(Box<SolutionDoc>),
}

impl CertificateDoc {
    pub fn p3(blocks: &[P3Block]) -> Self {
        CertificateDoc::P3Partition {
            blocks: blocks.iter().map(|b| b.path).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum EquivalenceDoc {
    Agree {
        hamiltonian: bool,
        path: Option<Vec<usize>>,
        subgraph: Option<Vec<Edge>>,
    },
    Disagree {
        path: Option<Vec<usize>>,
        subgraph: Option<Vec<Edge>>,
    },
}

impl EquivalenceDoc {
    pub fn new(e: &Equivalence) -> Self {
        let edges = |s: &Option<EdgeSet>| s.as_ref().map(|s| s.as_slice().to_vec());
        match e {
            Equivalence::Agree {
                hamiltonian,
                path,
                subgraph,
            } => EquivalenceDoc::Agree {
                hamiltonian: *hamiltonian,
                path: path.clone(),
                subgraph: edges(subgraph),
            },
            Equivalence::Disagree { path, subgraph } => EquivalenceDoc::Disagree {
                path: path.clone(),
                subgraph: edges(subgraph),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiReportDoc {
    pub predicate: String,
    pub n_max: usize,
    pub probed: usize,
    pub members: usize,
    pub passed: bool,
    pub violations: Vec<PiViolationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiViolationDoc {
    pub condition: &'static str,
    pub graph: GraphDoc,
    pub witness: Vec<usize>,
}

impl PiReportDoc {
    pub fn new(r: &PiReport) -> Self {
        PiReportDoc {
            predicate: r.predicate.clone(),
            n_max: r.n_max,
            probed: r.probed,
            members: r.members,
            passed: r.passed(),
            violations: r
                .violations
                .iter()
                .map(|v| PiViolationDoc {
                    condition: v.condition.name(),
                    graph: GraphDoc::new(&v.graph),
                    witness: v.witness.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SchemaError {
    #[error("solution is for a different host graph")]
    WrongHost,
    #[error("{0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solution(#[from] treelike_core::SolutionError),
}
