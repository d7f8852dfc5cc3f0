use alloc::vec;
use alloc::vec::Vec;

use super::{within, Limits, OracleError};
use crate::graph::Graph;

/// Bitmask dynamic program over vertex subsets: `ends[S]` holds the vertices
/// at which some path covering exactly `S` can end.
pub fn hamiltonian_path(g: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>, OracleError> {
    let n = g.n();
    within("vertex count", n, limits.hamiltonian_vertices.min(31))?;
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut e = ends[mask as usize];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = nbr[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    if ends[full as usize] == 0 {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    let mut mask = full;
    let mut cur = ends[full as usize].trailing_zeros() as usize;
    loop {
        path.push(cur);
        mask &= !(1 << cur);
        if mask == 0 {
            break;
        }
        cur = (ends[mask as usize] & nbr[cur]).trailing_zeros() as usize;
    }
    Ok(Some(path))
}

pub fn is_hamiltonian_path(g: &Graph, path: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.len() == g.n() && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
