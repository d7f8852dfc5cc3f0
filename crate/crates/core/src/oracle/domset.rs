use alloc::vec::Vec;

use super::{within, Limits, OracleError};
use crate::graph::Graph;

pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let mut dominated = alloc::vec![false; g.n()];
    for &d in set {
        if d >= g.n() {
            return false;
        }
        dominated[d] = true;
        for &w in g.neighbors(d) {
            dominated[w] = true;
        }
    }
    dominated.into_iter().all(|x| x)
}

struct Search<'a> {
    closed: &'a [u64],
    full: u64,
    max_cover: u32,
    best: u64,
    best_size: u32,
}

impl Search<'_> {
    /// Branch on the closed neighborhood of the smallest undominated vertex.
    fn run(&mut self, dominated: u64, chosen: u64, size: u32) {
        if dominated == self.full {
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        let missing = (self.full & !dominated).count_ones();
        let lower = missing.div_ceil(self.max_cover);
        if size + lower >= self.best_size {
            return;
        }
        let u = (self.full & !dominated).trailing_zeros() as usize;
        let mut options = self.closed[u];
        while options != 0 {
            let w = options.trailing_zeros() as usize;
            options &= options - 1;
            self.run(dominated | self.closed[w], chosen | 1 << w, size + 1);
        }
    }
}

/// Minimum dominating set by branch and bound, ascending.
pub fn min_dominating_set(g: &Graph, limits: &Limits) -> Result<Vec<usize>, OracleError> {
    let n = g.n();
    within("vertex count", n, limits.domination_vertices.min(63))?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let closed = g.closed_neighborhood_masks();
    let full = (1u64 << n) - 1;
    let mut search = Search {
        max_cover: closed.iter().map(|m| m.count_ones()).max().unwrap(),
        closed: &closed,
        full,
        best: full,
        best_size: n as u32 + 1,
    };
    search.run(0, 0, 0);
    Ok((0..n).filter(|&v| search.best >> v & 1 == 1).collect())
}
