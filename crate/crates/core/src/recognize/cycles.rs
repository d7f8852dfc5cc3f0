use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Shrinks an odd cycle by repeatedly cutting along a chord until the cycle is
/// induced. One side of every chord is odd, so the result stays odd.
pub fn shorten_odd_cycle(g: &Graph, mut cycle: Vec<usize>) -> Vec<usize> {
    debug_assert!(cycle.len() % 2 == 1);
    'outer: loop {
        let k = cycle.len();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if g.has_edge(cycle[i], cycle[j]) {
                    let inner: Vec<usize> = cycle[i..=j].to_vec();
                    cycle = if inner.len() % 2 == 1 {
                        inner
                    } else {
                        let mut outer: Vec<usize> = cycle[j..].to_vec();
                        outer.extend_from_slice(&cycle[..=i]);
                        outer
                    };
                    continue 'outer;
                }
            }
        }
        return cycle;
    }
}

/// An induced cycle of length at least 4, if one exists.
///
/// For each vertex `v` (ascending) and each non-adjacent pair `u < w` of its
/// neighbors, a shortest `u`-`w` path avoiding the rest of `N[v]` closes a
/// chordless cycle through `v`.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    for v in 0..n {
        let nb = g.neighbors(v);
        if nb.len() < 2 {
            continue;
        }
        blocked.iter_mut().for_each(|b| *b = false);
        blocked[v] = true;
        for &w in nb {
            blocked[w] = true;
        }
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                if let Some(path) = g.shortest_path_avoiding(a, b, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Every induced cycle of length at least 4, each listed once, starting at its
/// smallest vertex with the smaller of the two neighbors second.
///
/// Exponential in general; intended for small graphs.
pub fn induced_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    visit_induced_cycles(g, &mut |c| {
        out.push(c.to_vec());
        false
    });
    out
}

/// The first even induced cycle (length at least 4) in enumeration order.
pub fn find_even_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    visit_induced_cycles(g, &mut |c| {
        if c.len() % 2 == 0 {
            found = Some(c.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Calls `visit` on each induced cycle of length at least 4; stops early when
/// it returns true.
fn visit_induced_cycles(g: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        let stop = extend(g, s, &mut path, &mut on_path, visit);
        on_path[s] = false;
        if stop {
            return;
        }
    }
}

fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        // w may touch only `last`, and `s` when closing the cycle.
        let inner = if path.len() >= 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        if inner.iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        let closes = path.len() >= 2 && g.has_edge(s, w);
        if closes {
            if path.len() >= 3 && path[1] < w {
                path.push(w);
                let stop = visit(path);
                path.pop();
                if stop {
                    return true;
                }
            }
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let stop = extend(g, s, path, on_path, visit);
        on_path[w] = false;
        path.pop();
        if stop {
            return true;
        }
    }
    false
}
