//! Class predicates backed by an external program.

use std::io::Write;
use std::process::{Command, Stdio};

use treelike_core::oracle::OracleError;
use treelike_core::reduce::ClassPredicate;
use treelike_core::Graph;

use crate::format::{serialize_graph, Format};

/// Runs `sh -c <command>` once per query with the graph on standard input
/// in edge-list format. Exit status 0 means member, 1 means non-member;
/// anything else is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExecPredicate {
    pub command: String,
}

impl ExecPredicate {
    pub fn new(command: impl Into<String>) -> Self {
        ExecPredicate {
            command: command.into(),
        }
    }
}

impl ClassPredicate for ExecPredicate {
    fn name(&self) -> String {
        format!("exec:{}", self.command)
    }

    fn contains(&self, g: &Graph) -> Result<bool, OracleError> {
        let fail = |why: String| OracleError::Predicate(format!("{}: {why}", self.command));
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(&self.command)
            .stdin(Stdio::piped())
            .stdout(Stdio::null())
            .stderr(Stdio::inherit())
            .spawn()
            .map_err(|e| fail(e.to_string()))?;
        let input = serialize_graph(g, Format::EdgeList);
        let mut stdin = child.stdin.take().expect("stdin is piped");
        // A predicate may exit before reading everything; a broken pipe is
        // then not an error of ours.
        if let Err(e) = stdin.write_all(input.as_bytes()) {
            if e.kind() != std::io::ErrorKind::BrokenPipe {
                return Err(fail(e.to_string()));
            }
        }
        drop(stdin);
        let status = child.wait().map_err(|e| fail(e.to_string()))?;
        match status.code() {
            Some(0) => Ok(true),
            Some(1) => Ok(false),
            Some(c) => Err(fail(format!("exit status {c}"))),
            None => Err(fail("terminated by a signal".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use treelike_core::graph::families::*;

    #[test]
    fn exit_codes() {
        // Member when the header line (vertex count) is at most 3.
        let p = ExecPredicate::new("read n; [ \"$n\" -le 3 ] && exit 0 || exit 1");
        assert!(p.contains(&path(3)).unwrap());
        assert!(!p.contains(&path(4)).unwrap());
        let broken = ExecPredicate::new("exit 7");
        assert!(matches!(
            broken.contains(&path(2)),
            Err(OracleError::Predicate(_))
        ));
    }
}
