use alloc::vec;
use alloc::vec::Vec;

use super::cycles::find_hole;
use super::perfect::is_chordal;
use super::{find_claw, ClassCertificate, ClassLabel, Obstruction, Verdict, Witness};
use crate::graph::{connected_components, Graph};

pub fn is_claw_free_chordal(g: &Graph) -> ClassCertificate {
    let label = ClassLabel::ClawFreeChordal;
    match is_chordal(g).verdict {
        Verdict::Reject(o) => ClassCertificate::reject(label, o),
        Verdict::Accept(w) => match find_claw(g) {
            Some((center, leaves)) => {
                ClassCertificate::reject(label, Obstruction::Claw { center, leaves })
            }
            None => ClassCertificate::accept(label, w),
        },
    }
}

/// Proper interval graphs are exactly the claw-, net-, tent- and hole-free
/// graphs. Obstructions are searched first; an umbrella ordering (a unit
/// interval model in disguise) is then found by backtracking.
pub fn is_proper_interval(g: &Graph) -> ClassCertificate {
    let label = ClassLabel::ProperInterval;
    if let Some(o) = proper_interval_obstruction(g) {
        return ClassCertificate::reject(label, o);
    }
    match umbrella_order(g) {
        Some(order) => ClassCertificate::accept(label, Witness::UmbrellaOrder(order)),
        None => ClassCertificate::reject(label, Obstruction::NoModel),
    }
}

fn proper_interval_obstruction(g: &Graph) -> Option<Obstruction> {
    if let Some(h) = find_hole(g) {
        return Some(Obstruction::Hole(h));
    }
    if let Some((center, leaves)) = find_claw(g) {
        return Some(Obstruction::Claw { center, leaves });
    }
    find_net_or_tent(g)
}

/// Searches every triangle for three outside vertices forming a net or a tent.
fn find_net_or_tent(g: &Graph) -> Option<Obstruction> {
    let n = g.n();
    for a in 0..n {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if !g.has_edge(a, c) {
                    continue;
                }
                let t = [a, b, c];
                let outside: Vec<usize> = (0..n).filter(|v| !t.contains(v)).collect();
                // How each outside vertex attaches to the triangle, as a bitmask.
                let attach = |v: usize| -> u8 {
                    (0..3).fold(0, |m, i| m | ((g.has_edge(v, t[i]) as u8) << i))
                };
                let only = |v: usize, mask: u8| attach(v) == mask;
                let independent = |x: usize, y: usize, z: usize| {
                    !g.has_edge(x, y) && !g.has_edge(y, z) && !g.has_edge(x, z)
                };
                for &x in &outside {
                    for &y in &outside {
                        for &z in &outside {
                            if x == y || y == z || x == z || !independent(x, y, z) {
                                continue;
                            }
                            if only(x, 0b001) && only(y, 0b010) && only(z, 0b100) {
                                return Some(Obstruction::Net {
                                    triangle: t,
                                    pendants: [x, y, z],
                                });
                            }
                            if only(x, 0b011) && only(y, 0b110) && only(z, 0b101) {
                                return Some(Obstruction::Tent {
                                    triangle: t,
                                    tips: [x, y, z],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Placing `w` after `placed` keeps the umbrella property iff the placed
/// neighbors of `w` form a suffix that is a clique.
fn umbrella_extends(g: &Graph, placed: &[usize], w: usize) -> bool {
    let Some(first) = placed.iter().position(|&u| g.has_edge(u, w)) else {
        return true;
    };
    let suffix = &placed[first..];
    suffix.iter().all(|&u| g.has_edge(u, w))
        && suffix
            .iter()
            .enumerate()
            .all(|(i, &u)| suffix[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn umbrella_order(g: &Graph) -> Option<Vec<usize>> {
    // Components can be laid out one after another.
    let mut order = Vec::with_capacity(g.n());
    for comp in connected_components(g) {
        let mut placed = Vec::with_capacity(comp.len());
        let mut used = vec![false; g.n()];
        if !umbrella_search(g, &comp, &mut placed, &mut used) {
            return None;
        }
        order.extend(placed);
    }
    Some(order)
}

fn umbrella_search(g: &Graph, comp: &[usize], placed: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if placed.len() == comp.len() {
        return true;
    }
    for &w in comp {
        if used[w] {
            continue;
        }
        // Within a component the order stays connected.
        if !placed.is_empty() && !placed.iter().any(|&u| g.has_edge(u, w)) {
            continue;
        }
        if !umbrella_extends(g, placed, w) {
            continue;
        }
        placed.push(w);
        used[w] = true;
        if umbrella_search(g, comp, placed, used) {
            return true;
        }
        used[w] = false;
        placed.pop();
    }
    false
}

pub(crate) fn check_umbrella_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for i in 0..n {
        for k in i + 2..n {
            if g.has_edge(order[i], order[k])
                && !(i + 1..k)
                    .all(|j| g.has_edge(order[i], order[j]) && g.has_edge(order[j], order[k]))
            {
                return false;
            }
        }
    }
    true
}

/// Membership in `{P_n} ∪ {P_n^2}`: connected, and some vertex order makes
/// the edges exactly the pairs at distance at most one (or two).
pub fn is_path_power(g: &Graph) -> ClassCertificate {
    let label = ClassLabel::PathPower;
    let n = g.n();
    let comps = connected_components(g);
    if comps.len() > 1 {
        return ClassCertificate::reject(
            label,
            Obstruction::Disconnected {
                a: comps[0][0],
                b: comps[1][0],
            },
        );
    }
    for power in 1..=2 {
        if g.m() != path_power_edges(n, power) {
            continue;
        }
        if let Some(order) = path_power_order(g, power) {
            return ClassCertificate::accept(label, Witness::PathPowerOrder { order, power });
        }
    }
    let o = proper_interval_obstruction(g).unwrap_or(Obstruction::NoModel);
    ClassCertificate::reject(label, o)
}

fn path_power_edges(n: usize, power: usize) -> usize {
    (1..=power).map(|d| n.saturating_sub(d)).sum()
}

fn path_power_order(g: &Graph, power: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(g: &Graph, power: usize, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = g.n();
        if order.len() == n {
            return true;
        }
        let i = order.len();
        for w in 0..n {
            if used[w] {
                continue;
            }
            let fits = order
                .iter()
                .enumerate()
                .all(|(j, &u)| g.has_edge(u, w) == (i - j <= power));
            if !fits {
                continue;
            }
            order.push(w);
            used[w] = true;
            if go(g, power, order, used) {
                return true;
            }
            used[w] = false;
            order.pop();
        }
        false
    }
    go(g, power, &mut order, &mut used).then_some(order)
}

pub(crate) fn check_path_power_order(g: &Graph, order: &[usize], power: usize) -> bool {
    let n = g.n();
    if order.len() != n || power == 0 {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    (0..n).all(|a| (a + 1..n).all(|b| g.has_edge(a, b) == (pos[a].abs_diff(pos[b]) <= power)))
}
