use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::perfect::tree_cycle;
use super::{cycle_edges, is_cycle_of, ClassCertificate, ClassLabel, Obstruction, Witness};
use crate::graph::{connected_components, Edge, Graph};

/// BFS spanning forest plus the fundamental cycle of every non-tree edge.
struct CycleBasis {
    cycles: Vec<Vec<usize>>,
    /// Per edge index of the host: number of fundamental cycles through it.
    count: Vec<usize>,
    /// First edge lying on two fundamental cycles, with those cycles.
    shared: Option<(Edge, usize, usize)>,
}

fn cycle_basis(g: &Graph) -> CycleBasis {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree_edge = vec![false; g.m()];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    tree_edge[g.edge_index(v, w).unwrap()] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    let mut count = vec![0usize; g.m()];
    let mut owner = vec![usize::MAX; g.m()];
    let mut shared = None;
    for (i, e) in g.edges().iter().enumerate() {
        if tree_edge[i] {
            continue;
        }
        let cycle = tree_cycle(&parent, &depth, e.u, e.v);
        let idx = cycles.len();
        for ce in cycle_edges(&cycle) {
            let j = g.edge_index(ce.u, ce.v).unwrap();
            count[j] += 1;
            if owner[j] == usize::MAX {
                owner[j] = idx;
            } else if shared.is_none() {
                shared = Some((ce, owner[j], idx));
            }
        }
        cycles.push(cycle);
    }
    CycleBasis {
        cycles,
        count,
        shared,
    }
}

/// Every component is a cactus: fundamental cycles of a spanning forest are
/// pairwise edge-disjoint.
pub fn is_forest_of_cacti(g: &Graph) -> ClassCertificate {
    cactus_like(g, ClassLabel::ForestOfCacti)
}

/// Connected, and every edge lies on at most one cycle.
pub fn is_cactus(g: &Graph) -> ClassCertificate {
    if let Some(o) = disconnection(g) {
        return ClassCertificate::reject(ClassLabel::Cactus, o);
    }
    cactus_like(g, ClassLabel::Cactus)
}

fn cactus_like(g: &Graph, label: ClassLabel) -> ClassCertificate {
    let basis = cycle_basis(g);
    if let Some((edge, a, b)) = basis.shared {
        return ClassCertificate::reject(
            label,
            Obstruction::SharedEdge {
                edge,
                first: basis.cycles[a].clone(),
                second: basis.cycles[b].clone(),
            },
        );
    }
    let edge_cycle_count = g.edges().iter().copied().zip(basis.count).collect();
    ClassCertificate::accept(
        label,
        Witness::Cycles {
            cycles: basis.cycles,
            edge_cycle_count,
        },
    )
}

/// Edge-disjoint cycles whose number equals the cycle rank certify a forest
/// of cacti: each one is then the fundamental cycle of its own non-tree edge.
pub(crate) fn check_cycle_basis(
    g: &Graph,
    cycles: &[Vec<usize>],
    counts: &[(Edge, usize)],
) -> bool {
    let comps = connected_components(g).len();
    if g.m() + comps != g.n() + cycles.len() {
        return false;
    }
    let mut used = vec![0usize; g.m()];
    for c in cycles {
        if !is_cycle_of(g, c) {
            return false;
        }
        for e in cycle_edges(c) {
            let j = g.edge_index(e.u, e.v).unwrap();
            used[j] += 1;
            if used[j] > 1 {
                return false;
            }
        }
    }
    counts.len() == g.m()
        && counts
            .iter()
            .zip(g.edges())
            .zip(&used)
            .all(|((&(e, c), &ge), &u)| e == ge && c == u)
}

fn disconnection(g: &Graph) -> Option<Obstruction> {
    let comps = connected_components(g);
    (comps.len() > 1).then(|| Obstruction::Disconnected {
        a: comps[0][0],
        b: comps[1][0],
    })
}

/// A cycle, if the graph is not a forest.
fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let basis = cycle_basis(g);
    basis.cycles.into_iter().next()
}

pub fn is_linear_forest(g: &Graph) -> ClassCertificate {
    let label = ClassLabel::LinearForest;
    if let Some(c) = find_cycle(g) {
        return ClassCertificate::reject(label, Obstruction::Cycle(c));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) >= 3) {
        let nb = g.neighbors(v);
        return ClassCertificate::reject(
            label,
            Obstruction::Claw {
                center: v,
                leaves: [nb[0], nb[1], nb[2]],
            },
        );
    }
    let mut paths = Vec::new();
    for comp in connected_components(g) {
        let start = comp.iter().copied().find(|&v| g.degree(v) <= 1).unwrap();
        paths.push(walk_path(g, start));
    }
    ClassCertificate::accept(label, Witness::Paths(paths))
}

/// Follows a path component from an endpoint.
fn walk_path(g: &Graph, start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

pub(crate) fn check_paths(g: &Graph, paths: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.n()];
    let mut edges = 0;
    for p in paths {
        for &v in p {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if p.is_empty() || !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        edges += p.len() - 1;
    }
    seen.iter().all(|&s| s) && edges == g.m()
}

pub fn is_constellation(g: &Graph) -> ClassCertificate {
    let label = ClassLabel::Constellation;
    if let Some(c) = find_cycle(g) {
        return ClassCertificate::reject(label, Obstruction::Cycle(c));
    }
    for e in g.edges() {
        if g.degree(e.u) >= 2 && g.degree(e.v) >= 2 {
            let a = *g.neighbors(e.u).iter().find(|&&w| w != e.v).unwrap();
            let d = *g.neighbors(e.v).iter().find(|&&w| w != e.u).unwrap();
            return ClassCertificate::reject(label, Obstruction::PathOnFour([a, e.u, e.v, d]));
        }
    }
    let mut centers = Vec::new();
    for comp in connected_components(g) {
        let center = comp
            .iter()
            .copied()
            .find(|&v| g.degree(v) >= 2)
            .unwrap_or(comp[0]);
        centers.push(center);
    }
    centers.sort_unstable();
    ClassCertificate::accept(label, Witness::StarCenters(centers))
}

/// Centers of the stars of a spanning constellation, one per component.
pub fn star_centers(g: &Graph) -> Option<Vec<usize>> {
    match is_constellation(g).verdict {
        super::Verdict::Accept(Witness::StarCenters(c)) => Some(c),
        _ => None,
    }
}

pub(crate) fn check_star_centers(g: &Graph, centers: &[usize]) -> bool {
    let mut is_center = vec![false; g.n()];
    for &c in centers {
        if c >= g.n() || is_center[c] {
            return false;
        }
        is_center[c] = true;
    }
    g.edges().iter().all(|e| is_center[e.u] != is_center[e.v])
        && (0..g.n()).all(|v| is_center[v] || g.degree(v) == 1)
}

pub fn is_caterpillar(g: &Graph) -> ClassCertificate {
    let label = ClassLabel::Caterpillar;
    if let Some(o) = disconnection(g) {
        return ClassCertificate::reject(label, o);
    }
    if let Some(c) = find_cycle(g) {
        return ClassCertificate::reject(label, Obstruction::Cycle(c));
    }
    if g.max_degree() <= 2 {
        let start = (0..g.n()).find(|&v| g.degree(v) <= 1);
        let spine = start.map(|s| walk_path(g, s)).unwrap_or_default();
        return ClassCertificate::accept(label, Witness::Spine(spine));
    }
    let inner: Vec<bool> = (0..g.n()).map(|v| g.degree(v) >= 2).collect();
    for c in 0..g.n() {
        let mids: Vec<usize> = g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|&w| inner[w])
            .collect();
        if mids.len() >= 3 {
            let mut middle = [0; 3];
            let mut tips = [0; 3];
            for i in 0..3 {
                middle[i] = mids[i];
                tips[i] = *g.neighbors(mids[i]).iter().find(|&&t| t != c).unwrap();
            }
            return ClassCertificate::reject(
                label,
                Obstruction::SubdividedClaw {
                    center: c,
                    middle,
                    tips,
                },
            );
        }
    }
    // Non-leaves induce a path; walk it from an end.
    let inner_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| inner[w]).count();
    let start = (0..g.n())
        .find(|&v| inner[v] && inner_degree(v) <= 1)
        .unwrap();
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| inner[w] && w != prev) {
        spine.push(next);
        prev = cur;
        cur = next;
    }
    ClassCertificate::accept(label, Witness::Spine(spine))
}

/// A tree with a path that every vertex lies on or next to.
pub(crate) fn check_spine(g: &Graph, spine: &[usize]) -> bool {
    let n = g.n();
    if n == 0 {
        return spine.is_empty();
    }
    if g.m() + 1 != n || !g.is_connected() || spine.is_empty() {
        return false;
    }
    let mut on = vec![false; n];
    for &v in spine {
        if v >= n || on[v] {
            return false;
        }
        on[v] = true;
    }
    spine.windows(2).all(|w| g.has_edge(w[0], w[1]))
        && (0..n).all(|v| on[v] || g.neighbors(v).iter().any(|&w| on[w]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn cactus_examples() {
        let c = is_cactus(&cycle(4));
        assert!(c.is_accepted() && c.check(&cycle(4)));
        let k4 = complete(4);
        let c = is_cactus(&k4);
        assert!(matches!(
            c.obstruction(),
            Some(Obstruction::SharedEdge { .. })
        ));
        assert!(c.check(&k4));
        let b = bowtie();
        let c = is_cactus(&b);
        match c.witness() {
            Some(Witness::Cycles {
                cycles,
                edge_cycle_count,
            }) => {
                assert_eq!(cycles.len(), 2);
                assert!(edge_cycle_count.iter().all(|&(_, k)| k == 1));
            }
            other => panic!("unexpected {other:?}"),
        }
        let two = disjoint_union(&cycle(3), &cycle(3));
        assert!(matches!(
            is_cactus(&two).obstruction(),
            Some(Obstruction::Disconnected { a: 0, b: 3 })
        ));
        assert!(is_forest_of_cacti(&two).is_accepted());
    }

    #[test]
    fn tree_classes() {
        assert!(is_caterpillar(&star(4)).check(&star(4)));
        assert!(is_caterpillar(&path(1)).is_accepted());
        assert!(is_caterpillar(&path(2)).check(&path(2)));
        // Spider with three legs of length two.
        let spider =
            Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let c = is_caterpillar(&spider);
        assert!(matches!(
            c.obstruction(),
            Some(Obstruction::SubdividedClaw { center: 0, .. })
        ));
        assert!(c.check(&spider));

        let c = is_constellation(&path(4));
        assert_eq!(
            c.obstruction(),
            Some(&Obstruction::PathOnFour([0, 1, 2, 3]))
        );
        let stars = disjoint_union(&star(3), &path(2));
        assert_eq!(
            is_constellation(&stars).witness(),
            Some(&Witness::StarCenters(vec![0, 4]))
        );
        assert!(is_constellation(&Graph::empty(3)).check(&Graph::empty(3)));

        let lf = disjoint_union(&path(3), &Graph::empty(1));
        let c = is_linear_forest(&lf);
        assert_eq!(
            c.witness(),
            Some(&Witness::Paths(vec![vec![0, 1, 2], vec![3]]))
        );
        assert!(!is_linear_forest(&cycle(5)).is_accepted());
    }
}
