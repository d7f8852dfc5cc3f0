use alloc::vec;
use alloc::vec::Vec;

use super::{within, Limits, OracleError};
use crate::graph::{Edge, EdgeSet, Graph, UnionFind};
use crate::recognize::{induced_cycles, ClassLabel};
use crate::solution::SpanningSolution;

/// Maximum spanning cactus (or forest of cacti) by dynamic programming over
/// vertex subsets.
///
/// The cycles of a forest of cacti, read as vertex sets, form a
/// Berge-acyclic hypergraph, and each cycle may be shrunk to an induced
/// cycle of the host on a subset of its vertices without breaking that. So
/// the optimum is `n - c` plus the largest Berge-acyclic family of induced
/// cycles. Connected families are built by repeatedly attaching a leaf
/// hyperedge at a single vertex; arbitrary families are partitions into
/// connected ones.
pub fn max_spanning_cactus_by_cycles(
    g: &Graph,
    connected: bool,
    limits: &Limits,
) -> Result<SpanningSolution, OracleError> {
    let n = g.n();
    within("vertex count", n, limits.cycle_dp_vertices.min(24))?;
    if connected && !g.is_connected() {
        return Err(OracleError::Infeasible("host graph is disconnected"));
    }
    let cycles = all_induced_cycles(g);
    let masks: Vec<u32> = cycles
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let full: usize = (1usize << n) - 1;

    // tree[s]: most hyperedges in a connected Berge-acyclic family covering
    // exactly s; step[s] records the leaf hyperedge and attachment vertex.
    let mut tree = vec![-1i32; full + 1];
    let mut step = vec![(usize::MAX, 0usize); full + 1];
    for v in 0..n {
        tree[1 << v] = 0;
    }
    for s in 1..=full {
        if (s as u32).count_ones() < 3 {
            continue;
        }
        for (i, &e) in masks.iter().enumerate() {
            if e as usize & !s != 0 {
                continue;
            }
            let mut xs = e;
            while xs != 0 {
                let x = xs.trailing_zeros();
                xs &= xs - 1;
                let rest = (s & !(e as usize)) | 1 << x;
                if tree[rest] >= 0 && tree[rest] + 1 > tree[s] {
                    tree[s] = tree[rest] + 1;
                    step[s] = (i, rest);
                }
            }
        }
    }

    // forest[s]: best partition of s into covered parts; part[s] is the part
    // holding the lowest vertex.
    let mut forest = vec![0i32; full + 1];
    let mut part = vec![0usize; full + 1];
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let others = s & !low;
        forest[s] = forest[others];
        part[s] = low;
        let mut sub = others;
        loop {
            let t = sub | low;
            if tree[t] > 0 && tree[t] + forest[s & !t] > forest[s] {
                forest[s] = tree[t] + forest[s & !t];
                part[s] = t;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
    }

    let mut chosen = Vec::new();
    let mut s = full;
    while s != 0 {
        let mut t = part[s];
        while tree[t] > 0 {
            let (i, rest) = step[t];
            chosen.push(i);
            t = rest;
        }
        s &= !part[s];
    }
    chosen.sort_unstable();

    let mut kept: Vec<Edge> = Vec::new();
    for &i in &chosen {
        let c = &cycles[i];
        for j in 0..c.len() {
            kept.push(Edge::new(c[j], c[(j + 1) % c.len()]));
        }
    }
    let mut uf = UnionFind::new(n);
    for e in &kept {
        uf.union(e.u, e.v);
    }
    for &e in g.edges() {
        if uf.union(e.u, e.v) {
            kept.push(e);
        }
    }
    let label = if connected {
        ClassLabel::Cactus
    } else {
        ClassLabel::ForestOfCacti
    };
    Ok(SpanningSolution::new(
        g.clone(),
        EdgeSet::from_edges_unchecked(kept),
        label,
    )?)
}

/// Triangles (ascending) followed by longer induced cycles.
fn all_induced_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for e in g.edges() {
        for &w in g.neighbors(e.v) {
            if w > e.v && g.has_edge(e.u, w) {
                out.push(vec![e.u, e.v, w]);
            }
        }
    }
    out.extend(induced_cycles(g));
    out
}
