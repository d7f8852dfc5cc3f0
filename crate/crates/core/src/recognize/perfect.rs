use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::cycles::{find_hole, shorten_odd_cycle};
use super::{ClassCertificate, ClassLabel, Obstruction, Witness};
use crate::graph::Graph;

/// Two-colors each component from its smallest vertex, which goes left.
pub fn is_bipartite(g: &Graph) -> ClassCertificate {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    let cycle = tree_cycle(&parent, &depth, v, w);
                    return ClassCertificate::reject(
                        ClassLabel::Bipartite,
                        Obstruction::OddCycle(shorten_odd_cycle(g, cycle)),
                    );
                }
            }
        }
    }
    let left = (0..n).filter(|&v| color[v] == 0).collect();
    let right = (0..n).filter(|&v| color[v] == 1).collect();
    ClassCertificate::accept(ClassLabel::Bipartite, Witness::Bipartition { left, right })
}

/// The cycle formed by tree paths from `a` and `b` to their common ancestor
/// plus the non-tree edge `ab`, listed from `a` through the ancestor to `b`.
pub(crate) fn tree_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut from_a = vec![x];
    let mut from_b = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        from_a.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        from_b.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        from_a.push(x);
        from_b.push(y);
    }
    from_b.pop();
    from_a.extend(from_b.into_iter().rev());
    from_a
}

pub(crate) fn check_bipartition(g: &Graph, left: &[usize], right: &[usize]) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    for (s, part) in [(0u8, left), (1u8, right)] {
        for &v in part {
            if v >= g.n() || side[v] != u8::MAX {
                return false;
            }
            side[v] = s;
        }
    }
    side.iter().all(|&s| s != u8::MAX) && g.edges().iter().all(|e| side[e.u] != side[e.v])
}

/// Maximum cardinality search, ties to the smallest vertex. Returns the
/// visit order; its reverse is a perfect elimination ordering iff `g` is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

pub(crate) fn check_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

pub fn is_chordal(g: &Graph) -> ClassCertificate {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    if check_elimination_order(g, &order) {
        return ClassCertificate::accept(ClassLabel::Chordal, Witness::EliminationOrder(order));
    }
    let hole = find_hole(g).expect("a graph without a perfect elimination ordering has a hole");
    ClassCertificate::reject(ClassLabel::Chordal, Obstruction::Hole(hole))
}

/// Peels the smallest universal vertex of every connected piece, recursively.
/// Accepts with the resulting rooted forest, or rejects with an induced
/// `P4`/`C4` from the first piece that has no universal vertex.
pub fn is_quasi_threshold(g: &Graph) -> ClassCertificate {
    let n = g.n();
    let mut parent = vec![None; n];
    let mut in_piece = vec![false; n];
    // (vertices of a connected piece, parent of its universal vertex)
    let mut work: Vec<(Vec<usize>, Option<usize>)> =
        split_components(g, &(0..n).collect::<Vec<_>>(), &mut in_piece)
            .into_iter()
            .map(|piece| (piece, None))
            .collect();
    work.reverse();
    while let Some((piece, up)) = work.pop() {
        for &v in &piece {
            in_piece[v] = true;
        }
        let universal = piece
            .iter()
            .copied()
            .find(|&v| g.neighbors(v).iter().filter(|&&w| in_piece[w]).count() == piece.len() - 1);
        for &v in &piece {
            in_piece[v] = false;
        }
        let Some(u) = universal else {
            return ClassCertificate::reject(ClassLabel::QuasiThreshold, p4_or_c4(g, &piece));
        };
        parent[u] = up;
        let rest: Vec<usize> = piece.into_iter().filter(|&v| v != u).collect();
        let mut pieces = split_components(g, &rest, &mut in_piece);
        pieces.reverse();
        work.extend(pieces.into_iter().map(|p| (p, Some(u))));
    }
    ClassCertificate::accept(ClassLabel::QuasiThreshold, Witness::PeelForest { parent })
}

/// Components of `g[vertices]`, each sorted, ordered by smallest member.
fn split_components(g: &Graph, vertices: &[usize], scratch: &mut [bool]) -> Vec<Vec<usize>> {
    for &v in vertices {
        scratch[v] = true;
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    for &s in &sorted {
        if !scratch[s] {
            continue;
        }
        scratch[s] = false;
        let mut block = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if scratch[w] {
                    scratch[w] = false;
                    block.push(w);
                    stack.push(w);
                }
            }
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

/// In a connected piece without a universal vertex: let `v` have maximum
/// degree, `w` be at distance two via `x`. Some `y ~ v` misses `x` since
/// `deg v >= deg x`; then `y v x w` is a `P4`, or a `C4` when `y ~ w`.
fn p4_or_c4(g: &Graph, piece: &[usize]) -> Obstruction {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in piece {
        inside[v] = true;
    }
    let deg = |v: usize| g.neighbors(v).iter().filter(|&&w| inside[w]).count();
    let v = piece
        .iter()
        .copied()
        .max_by(|&a, &b| deg(a).cmp(&deg(b)).then(b.cmp(&a)))
        .unwrap();
    let blocked: Vec<bool> = (0..n).map(|u| !inside[u]).collect();
    let mut dist = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if !blocked[b] && dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    let w = piece
        .iter()
        .copied()
        .find(|&u| dist[u] == 2)
        .expect("piece has no universal vertex");
    let x = g
        .neighbors(v)
        .iter()
        .copied()
        .find(|&u| inside[u] && g.has_edge(u, w))
        .unwrap();
    let y = g
        .neighbors(v)
        .iter()
        .copied()
        .find(|&u| inside[u] && u != x && !g.has_edge(u, x))
        .expect("degree argument guarantees a private neighbor of v");
    if g.has_edge(y, w) {
        Obstruction::InducedC4([y, v, x, w])
    } else {
        Obstruction::InducedP4([y, v, x, w])
    }
}

/// Adjacency must coincide with the strict ancestor relation of the forest.
pub(crate) fn check_peel_forest(g: &Graph, parent: &[Option<usize>]) -> bool {
    let n = g.n();
    if parent.len() != n {
        return false;
    }
    let mut ancestors: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut chain = Vec::new();
        let mut cur = parent[v];
        while let Some(p) = cur {
            if p >= n || chain.len() > n {
                return false;
            }
            chain.push(p);
            cur = parent[p];
        }
        ancestors.push(chain);
    }
    let mut count = 0;
    for (v, chain) in ancestors.iter().enumerate() {
        for &a in chain {
            if !g.has_edge(v, a) {
                return false;
            }
            count += 1;
        }
    }
    count == g.m()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::subdivide_twice;

    #[test]
    fn bipartite_examples() {
        let c = is_bipartite(&cycle(4));
        assert_eq!(
            c.witness(),
            Some(&Witness::Bipartition {
                left: vec![0, 2],
                right: vec![1, 3]
            })
        );
        let c = is_bipartite(&complete(3));
        assert_eq!(c.obstruction(), Some(&Obstruction::OddCycle(vec![1, 0, 2])));
        assert!(c.check(&complete(3)));
        // Doubly subdividing K3 gives C9, which is odd.
        let c9 = subdivide_twice(&complete(3)).graph;
        let c = is_bipartite(&c9);
        assert!(!c.is_accepted() && c.check(&c9));
        assert_eq!(
            c.obstruction()
                .map(|o| matches!(o, Obstruction::OddCycle(v) if v.len() == 9)),
            Some(true)
        );
        assert!(is_bipartite(&subdivide_twice(&complete(2)).graph).is_accepted());
    }

    #[test]
    fn odd_cycle_obstruction_is_induced() {
        // C7 plus a chord making a triangle and a C6.
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 2));
        let g = Graph::from_edges(7, edges).unwrap();
        let c = is_bipartite(&g);
        assert!(c.check(&g));
        assert_eq!(
            c.obstruction()
                .map(|o| matches!(o, Obstruction::OddCycle(v) if v.len() == 3)),
            Some(true)
        );
    }

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&complete(4)).is_accepted());
        let c = is_chordal(&cycle(4));
        assert_eq!(c.obstruction(), Some(&Obstruction::Hole(vec![0, 1, 2, 3])));
        assert!(is_chordal(&fan(6)).check(&fan(6)));
        let p = petersen();
        let c = is_chordal(&p);
        assert!(!c.is_accepted() && c.check(&p));
    }

    #[test]
    fn quasi_threshold_examples() {
        let c = is_quasi_threshold(&path(4));
        assert!(matches!(c.obstruction(), Some(Obstruction::InducedP4(_))));
        assert!(c.check(&path(4)));
        let c = is_quasi_threshold(&cycle(4));
        assert!(matches!(c.obstruction(), Some(Obstruction::InducedC4(_))));
        assert!(c.check(&cycle(4)));
        let c = is_quasi_threshold(&complete(4));
        assert_eq!(
            c.witness(),
            Some(&Witness::PeelForest {
                parent: vec![None, Some(0), Some(1), Some(2)]
            })
        );
        let c = is_quasi_threshold(&star(3));
        assert_eq!(
            c.witness(),
            Some(&Witness::PeelForest {
                parent: vec![None, Some(0), Some(0), Some(0)]
            })
        );
        assert!(c.check(&star(3)));
    }
}
