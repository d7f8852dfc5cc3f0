use core::fmt;

use crate::graph::{EdgeSet, Graph};
use crate::recognize::{
    in_target_class, ClassCertificate, ClassLabel, Obstruction, RecognizeError, Verdict,
};

/// A spanning subgraph of `host`, certified to lie in `label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningSolution {
    host: Graph,
    kept: EdgeSet,
    label: ClassLabel,
    certificate: ClassCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionError {
    NotInClass {
        label: ClassLabel,
        obstruction: Obstruction,
    },
    Recognize(RecognizeError),
}

impl fmt::Display for SolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionError::NotInClass { label, obstruction } => {
                write!(f, "kept edges do not form a {label}: {obstruction:?}")
            }
            SolutionError::Recognize(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for SolutionError {}

impl From<RecognizeError> for SolutionError {
    fn from(e: RecognizeError) -> Self {
        SolutionError::Recognize(e)
    }
}

impl SpanningSolution {
    /// Runs the recognizer for `label` on `(V(host), kept)`.
    pub fn new(host: Graph, kept: EdgeSet, label: ClassLabel) -> Result<Self, SolutionError> {
        let certificate = in_target_class(&host.spanning_subgraph(&kept), label)?;
        match certificate.verdict {
            Verdict::Accept(_) => Ok(SpanningSolution {
                host,
                kept,
                label,
                certificate,
            }),
            Verdict::Reject(obstruction) => Err(SolutionError::NotInClass { label, obstruction }),
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn kept(&self) -> &EdgeSet {
        &self.kept
    }

    pub fn label(&self) -> ClassLabel {
        self.label
    }

    /// Membership certificate of the kept subgraph.
    pub fn certificate(&self) -> &ClassCertificate {
        &self.certificate
    }

    pub fn deletions(&self) -> usize {
        self.host.m() - self.kept.len()
    }

    pub fn kept_graph(&self) -> Graph {
        self.host.spanning_subgraph(&self.kept)
    }

    /// Re-runs the recognizer and checks the stored certificate.
    pub fn verify(&self) -> bool {
        let g = self.kept_graph();
        self.certificate.check(&g)
            && in_target_class(&g, self.label)
                .map(|c| c.is_accepted())
                .unwrap_or(false)
    }
}
