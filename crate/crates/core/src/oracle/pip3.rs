use alloc::vec;
use alloc::vec::Vec;

use super::{within, Limits, OracleError};
use crate::graph::Graph;

/// A block of a `P3` partition, listed as a path: `path[1]` is adjacent to
/// both ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct P3Block {
    pub path: [usize; 3],
}

impl P3Block {
    pub fn middle(&self) -> usize {
        self.path[1]
    }

    pub fn ends(&self) -> [usize; 2] {
        [self.path[0], self.path[2]]
    }

    /// Orders three vertices of `g` as a path, if they contain one.
    pub fn in_graph(g: &Graph, vertices: [usize; 3], mode: P3Mode) -> Option<P3Block> {
        if vertices.iter().any(|&v| v >= g.n())
            || vertices[0] == vertices[1]
            || vertices[1] == vertices[2]
            || vertices[0] == vertices[2]
        {
            return None;
        }
        let mut sorted = vertices;
        sorted.sort_unstable();
        as_path(g, sorted, mode)
    }

    /// Vertices in ascending order.
    pub fn sorted(&self) -> [usize; 3] {
        let mut s = self.path;
        s.sort_unstable();
        s
    }
}

/// Whether a block may be a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum P3Mode {
    /// The three vertices contain a spanning path (a triangle qualifies).
    #[default]
    Spanning,
    /// The three vertices induce exactly a path.
    Induced,
}

/// Orders three vertices as a path in `g`, if they contain one.
fn as_path(g: &Graph, tri: [usize; 3], mode: P3Mode) -> Option<P3Block> {
    let [a, b, c] = tri;
    let (ab, bc, ac) = (g.has_edge(a, b), g.has_edge(b, c), g.has_edge(a, c));
    let edges = ab as u8 + bc as u8 + ac as u8;
    if edges < 2 || (mode == P3Mode::Induced && edges == 3) {
        return None;
    }
    let path = if ab && bc {
        [a, b, c]
    } else if ab && ac {
        [b, a, c]
    } else {
        [a, c, b]
    };
    Some(P3Block { path })
}

pub fn check_p3_partition(g: &Graph, blocks: &[P3Block], mode: P3Mode) -> bool {
    let mut seen = vec![false; g.n()];
    for b in blocks {
        for &v in &b.path {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let [x, y, z] = b.path;
        if !g.has_edge(x, y) || !g.has_edge(y, z) {
            return false;
        }
        if mode == P3Mode::Induced && g.has_edge(x, z) {
            return false;
        }
    }
    seen.into_iter().all(|s| s)
}

fn search(g: &Graph, mode: P3Mode, covered: &mut [bool], blocks: &mut Vec<P3Block>) -> bool {
    let Some(v) = covered.iter().position(|&c| !c) else {
        return true;
    };
    // Every uncovered vertex needs an uncovered neighbor.
    let stranded = (0..g.n()).any(|u| !covered[u] && !g.neighbors(u).iter().any(|&w| !covered[w]));
    if stranded {
        return false;
    }
    covered[v] = true;
    // Candidates: uncovered vertices within distance two of v.
    let mut near: Vec<usize> = Vec::new();
    for &a in g.neighbors(v) {
        if !covered[a] {
            near.push(a);
        }
        for &b in g.neighbors(a) {
            if !covered[b] {
                near.push(b);
            }
        }
    }
    near.sort_unstable();
    near.dedup();
    for (i, &a) in near.iter().enumerate() {
        for &b in &near[i + 1..] {
            let Some(block) = as_path(g, [v, a, b], mode) else {
                continue;
            };
            covered[a] = true;
            covered[b] = true;
            blocks.push(block);
            if search(g, mode, covered, blocks) {
                return true;
            }
            blocks.pop();
            covered[a] = false;
            covered[b] = false;
        }
    }
    covered[v] = false;
    false
}

/// Exact search for a partition of `V(g)` into 3-vertex paths.
pub fn partition_into_p3(
    g: &Graph,
    mode: P3Mode,
    limits: &Limits,
) -> Result<Option<Vec<P3Block>>, OracleError> {
    if !g.n().is_multiple_of(3) {
        return Ok(None);
    }
    within("vertex count", g.n(), limits.p3_vertices)?;
    let mut covered = vec![false; g.n()];
    let mut blocks = Vec::new();
    Ok(search(g, mode, &mut covered, &mut blocks).then_some(blocks))
}
