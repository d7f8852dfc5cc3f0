//! Maximum spanning cactus of a quasi-threshold graph: a star from a
//! universal vertex plus a maximum matching of the rest.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{connected_components, Edge, EdgeSet, Graph};
use crate::oracle::{max_matching, max_spanning_cactus_by_cycles, Limits};
use crate::pipeline::{certificate_cycles, CactusOptions, PipelineError};
use crate::recognize::{is_quasi_threshold, ClassLabel};
use crate::solution::SpanningSolution;

/// A connected piece of the decomposition. `peel[i]` is universal in
/// `vertices` minus `peel[..i]`; peeling stops when one vertex remains or
/// the rest falls apart, and `children` are the components of what is left.
/// A single vertex is a leaf with nothing peeled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtNode {
    pub vertices: Vec<usize>,
    pub peel: Vec<usize>,
    pub children: Vec<QtNode>,
}

/// One root per connected component, ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtDecomposition {
    pub roots: Vec<QtNode>,
}

impl QtNode {
    /// The vertex the solver builds its star from.
    pub fn center(&self) -> usize {
        self.peel.first().copied().unwrap_or(self.vertices[0])
    }

    /// Checks the peel and split invariants against `g`, recursively.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut rest = self.vertices.clone();
        for &u in &self.peel {
            let Some(i) = rest.iter().position(|&v| v == u) else {
                return false;
            };
            if rest.iter().any(|&v| v != u && !g.has_edge(u, v)) {
                return false;
            }
            rest.remove(i);
        }
        if self.peel.is_empty() {
            return self.vertices.len() == 1 && self.children.is_empty();
        }
        let (sub, map) = g.induced_subgraph(&rest);
        let parts: Vec<Vec<usize>> = connected_components(&sub)
            .into_iter()
            .map(|c| c.into_iter().map(|i| map[i]).collect())
            .collect();
        parts.len() == self.children.len()
            && (rest.len() == 1 || parts.len() > 1)
            && self
                .children
                .iter()
                .zip(&parts)
                .all(|(c, p)| c.vertices == *p && c.is_valid(g))
    }
}

impl QtDecomposition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let comps = connected_components(g);
        comps.len() == self.roots.len()
            && self
                .roots
                .iter()
                .zip(&comps)
                .all(|(r, c)| r.vertices == *c && r.is_valid(g))
    }
}

fn decompose_piece(g: &Graph, vertices: Vec<usize>, member: &mut [bool]) -> QtNode {
    let mut rest = vertices.clone();
    let mut peel = Vec::new();
    loop {
        if rest.len() == 1 && !peel.is_empty() {
            let leaf = QtNode {
                vertices: rest,
                peel: Vec::new(),
                children: Vec::new(),
            };
            return QtNode {
                vertices,
                peel,
                children: vec![leaf],
            };
        }
        if rest.len() == 1 {
            return QtNode {
                vertices: rest,
                peel,
                children: Vec::new(),
            };
        }
        for &v in &rest {
            member[v] = true;
        }
        let universal = rest
            .iter()
            .copied()
            .find(|&u| g.neighbors(u).iter().filter(|&&w| member[w]).count() == rest.len() - 1);
        for &v in &rest {
            member[v] = false;
        }
        let u = universal.expect("quasi-threshold piece has a universal vertex");
        peel.push(u);
        rest.retain(|&v| v != u);
        let (sub, map) = g.induced_subgraph(&rest);
        let parts = connected_components(&sub);
        if parts.len() > 1 {
            let children = parts
                .into_iter()
                .map(|c| decompose_piece(g, c.into_iter().map(|i| map[i]).collect(), member))
                .collect();
            return QtNode {
                vertices,
                peel,
                children,
            };
        }
    }
}

/// Universal-vertex decomposition, peeling the smallest universal vertex
/// first.
pub fn qt_decompose(g: &Graph) -> Result<QtDecomposition, PipelineError> {
    if let Some(o) = is_quasi_threshold(g).obstruction() {
        return Err(PipelineError::WrongClass {
            expected: "quasi-threshold",
            obstruction: o.clone(),
        });
    }
    let mut member = vec![false; g.n()];
    let roots = connected_components(g)
        .into_iter()
        .map(|c| decompose_piece(g, c, &mut member))
        .collect();
    Ok(QtDecomposition { roots })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtSolution {
    pub solution: SpanningSolution,
    /// Star center of each component.
    pub centers: Vec<usize>,
    /// Matching edges, one triangle each.
    pub matching: Vec<Edge>,
}

/// Per component: every edge at the smallest universal vertex `v`, plus a
/// maximum matching of the component minus `v`. Every cycle is a triangle
/// through `v`.
pub fn max_spanning_cactus_qt(
    g: &Graph,
    options: &CactusOptions,
    limits: &Limits,
) -> Result<QtSolution, PipelineError> {
    let dec = qt_decompose(g)?;
    if dec.roots.len() > 1 && !options.forest {
        return Err(PipelineError::Disconnected {
            components: dec.roots.len(),
        });
    }
    let mut kept = Vec::new();
    let mut centers = Vec::new();
    let mut matching = Vec::new();
    for root in &dec.roots {
        let v = root.center();
        centers.push(v);
        kept.extend(
            root.vertices
                .iter()
                .filter(|&&u| u != v)
                .map(|&u| Edge::new(v, u)),
        );
        let rest: Vec<usize> = root.vertices.iter().copied().filter(|&u| u != v).collect();
        let (sub, map) = g.induced_subgraph(&rest);
        matching.extend(
            max_matching(&sub)
                .into_iter()
                .map(|e| Edge::new(map[e.u], map[e.v])),
        );
    }
    matching.sort_unstable();
    kept.extend(matching.iter().copied());
    let label = if dec.roots.len() <= 1 {
        ClassLabel::Cactus
    } else {
        ClassLabel::ForestOfCacti
    };
    let kept = EdgeSet::within(g, kept.iter().map(|&e| (e.u, e.v))).expect("host edges");
    let solution = SpanningSolution::new(g.clone(), kept, label).map_err(|e| {
        PipelineError::Defensive(format!("star plus matching is not a {label}: {e}"))
    })?;
    let expected = g.n() - dec.roots.len() + matching.len();
    if solution.kept().len() != expected {
        return Err(PipelineError::Defensive(format!(
            "kept {} edges, expected {expected}",
            solution.kept().len()
        )));
    }
    if options.cross_check {
        let oracle = max_spanning_cactus_by_cycles(g, dec.roots.len() <= 1, limits)?;
        if oracle.kept().len() != solution.kept().len() {
            return Err(PipelineError::Suboptimal {
                found: solution.kept().len(),
                optimum: oracle.kept().len(),
            });
        }
    }
    Ok(QtSolution {
        solution,
        centers,
        matching,
    })
}

struct Sides {
    left: Vec<bool>,
}

impl Sides {
    fn crosses(&self, c: &[usize]) -> bool {
        c.iter().any(|&v| self.left[v]) && c.iter().any(|&v| !self.left[v])
    }
}

fn check_join(g1: &[usize], g2: &[usize], g: &Graph) -> Result<Sides, PipelineError> {
    let mut seen = vec![0u8; g.n()];
    for &v in g1 {
        if v >= g.n() {
            return Err(PipelineError::InvalidSides);
        }
        seen[v] |= 1;
    }
    for &v in g2 {
        if v >= g.n() {
            return Err(PipelineError::InvalidSides);
        }
        seen[v] |= 2;
    }
    if seen.iter().any(|&s| s != 1 && s != 2) {
        return Err(PipelineError::InvalidSides);
    }
    for &a in g1 {
        for &b in g2 {
            if !g.has_edge(a, b) {
                return Err(PipelineError::NotJoin {
                    missing: Edge::new(a, b),
                });
            }
        }
    }
    Ok(Sides {
        left: seen.iter().map(|&s| s == 1).collect(),
    })
}

fn rebuild(g: &Graph, kept: Vec<Edge>) -> Result<SpanningSolution, PipelineError> {
    let kept = EdgeSet::within(g, kept.iter().map(|&e| (e.u, e.v))).expect("host edges");
    SpanningSolution::new(g.clone(), kept, ClassLabel::Cactus)
        .map_err(|e| PipelineError::Defensive(format!("rewrite broke the cactus: {e}")))
}

/// Replaces a cycle inside one side. Removing the two cycle edges at `c[i]`,
/// where the part hanging at `c[i]` reaches the other side at `v`, leaves
/// the path `c[i+1] .. c[i-1]`. Its alternate edges are kept as a matching,
/// each matched pair forms a triangle with `v`, and an unmatched end is
/// joined to `v` directly.
fn relocate(
    g: &Graph,
    sol: &SpanningSolution,
    sides: &Sides,
    c: &[usize],
) -> Result<SpanningSolution, PipelineError> {
    let k = c.len();
    let t = sol.kept_graph();
    let on_cycle: Vec<bool> = (0..g.n()).map(|v| c.contains(&v)).collect();
    let side = sides.left[c[0]];
    // Search from each cycle vertex without passing through the cycle.
    let mut found = None;
    for (i, &start) in c.iter().enumerate() {
        let mut seen = vec![false; g.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut best: Option<usize> = None;
        while let Some(x) = stack.pop() {
            if sides.left[x] != side {
                best = Some(best.map_or(x, |b: usize| b.min(x)));
            }
            for &w in t.neighbors(x) {
                if !seen[w] && !on_cycle[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = best {
            found = Some((i, v));
            break;
        }
    }
    let Some((i, v)) = found else {
        return Err(PipelineError::Defensive(format!(
            "cycle {c:?} cannot reach the other side"
        )));
    };
    let path: Vec<usize> = (1..k).map(|j| c[(i + j) % k]).collect();
    let cycle_edges: Vec<Edge> = (0..k).map(|j| Edge::new(c[j], c[(j + 1) % k])).collect();
    let mut kept: Vec<Edge> = sol
        .kept()
        .iter()
        .filter(|e| !cycle_edges.contains(e))
        .collect();
    for pair in path.chunks(2) {
        if let [a, b] = *pair {
            kept.extend([Edge::new(a, b), Edge::new(v, a), Edge::new(v, b)]);
        } else {
            kept.push(Edge::new(v, pair[0]));
        }
    }
    rebuild(g, kept)
}

/// Shortens a crossing cycle of length at least five through a chord
/// between the two sides.
fn shorten(
    g: &Graph,
    sol: &SpanningSolution,
    sides: &Sides,
    c: &[usize],
) -> Result<SpanningSolution, PipelineError> {
    let k = c.len();
    let chord = (0..k)
        .flat_map(|a| (a + 2..k).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == k - 1))
        .find(|&(a, b)| sides.left[c[a]] != sides.left[c[b]]);
    let Some((a, b)) = chord else {
        return Err(PipelineError::Defensive(format!(
            "crossing cycle {c:?} has no cross chord"
        )));
    };
    debug_assert!(g.has_edge(c[a], c[b]));
    let removed = Edge::new(c[a], c[a + 1]);
    let mut kept: Vec<Edge> = sol.kept().iter().filter(|&e| e != removed).collect();
    kept.push(Edge::new(c[a], c[b]));
    rebuild(g, kept)
}

/// Rewrites a spanning cactus of the join of `g1` and `g2` so that every
/// cycle is a triangle or a 4-cycle with vertices on both sides, without
/// losing edges. With an empty side there is nothing to cross and `sol` is
/// returned unchanged.
pub fn join_lemma_rewrite(
    g1: &[usize],
    g2: &[usize],
    g: &Graph,
    sol: &SpanningSolution,
) -> Result<SpanningSolution, PipelineError> {
    let sides = check_join(g1, g2, g)?;
    if sol.host() != g {
        return Err(PipelineError::WrongHost);
    }
    if sol.label() != ClassLabel::Cactus || !sol.verify() {
        return Err(PipelineError::Defensive(
            "input is not a certified spanning cactus".into(),
        ));
    }
    if g1.is_empty() || g2.is_empty() {
        return Ok(sol.clone());
    }
    let mut cur = sol.clone();
    loop {
        let cycles = certificate_cycles(&cur)?;
        if let Some(c) = cycles.iter().find(|c| !sides.crosses(c)) {
            cur = relocate(g, &cur, &sides, c)?;
        } else if let Some(c) = cycles.iter().find(|c| c.len() > 4) {
            cur = shorten(g, &cur, &sides, c)?;
        } else {
            return Ok(cur);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn decompositions() {
        let d = qt_decompose(&star(3)).unwrap();
        assert_eq!(d.roots.len(), 1);
        assert_eq!(d.roots[0].peel, vec![0]);
        assert_eq!(d.roots[0].children.len(), 3);
        assert!(d.is_valid(&star(3)));
        let d = qt_decompose(&complete(4)).unwrap();
        assert_eq!(d.roots[0].peel, vec![0, 1, 2]);
        assert_eq!(d.roots[0].children[0].vertices, vec![3]);
        assert!(d.is_valid(&complete(4)));
        assert!(matches!(
            qt_decompose(&path(4)),
            Err(PipelineError::WrongClass { .. })
        ));
        let e = Graph::empty(2);
        let d = qt_decompose(&e).unwrap();
        assert_eq!(d.roots.len(), 2);
        assert!(d.is_valid(&e));
    }

    #[test]
    fn solver_examples() {
        let l = Limits::default();
        let opts = CactusOptions {
            cross_check: true,
            ..Default::default()
        };
        let s = max_spanning_cactus_qt(&star(3), &opts, &l).unwrap();
        assert_eq!((s.solution.kept().len(), s.matching.len()), (3, 0));
        let s = max_spanning_cactus_qt(&complete(4), &opts, &l).unwrap();
        assert_eq!((s.solution.kept().len(), s.solution.deletions()), (4, 2));
        let s = max_spanning_cactus_qt(&complete(5), &opts, &l).unwrap();
        assert_eq!(
            (
                s.solution.kept().len(),
                s.solution.deletions(),
                s.matching.len()
            ),
            (6, 4, 2)
        );
        let two = disjoint_union(&complete(3), &star(2));
        assert!(matches!(
            max_spanning_cactus_qt(&two, &opts, &l),
            Err(PipelineError::Disconnected { components: 2 })
        ));
        let f = max_spanning_cactus_qt(&two, &CactusOptions::forest(), &l).unwrap();
        assert_eq!(f.solution.kept().len(), 5);
        assert_eq!(f.centers, vec![0, 3]);
    }

    #[test]
    fn rewrite_examples() {
        let k4 = complete(4);
        let kept = EdgeSet::within(&k4, [(1, 2), (2, 3), (1, 3), (0, 1)]).unwrap();
        let sol = SpanningSolution::new(k4.clone(), kept, ClassLabel::Cactus).unwrap();
        let r = join_lemma_rewrite(&[0], &[1, 2, 3], &k4, &sol).unwrap();
        assert_eq!(r.kept().len(), 4);
        let cycles = certificate_cycles(&r).unwrap();
        assert_eq!(cycles.len(), 1);
        assert!(cycles[0].contains(&0));
        assert_eq!(r.kept_graph().degree(0), 3);

        let crossing = EdgeSet::within(&k4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let sol = SpanningSolution::new(k4.clone(), crossing, ClassLabel::Cactus).unwrap();
        assert_eq!(
            join_lemma_rewrite(&[0], &[1, 2, 3], &k4, &sol).unwrap(),
            sol
        );

        let f = fan(3);
        let tree = EdgeSet::within(&f, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let sol = SpanningSolution::new(f.clone(), tree, ClassLabel::Cactus).unwrap();
        assert_eq!(join_lemma_rewrite(&[0], &[1, 2, 3], &f, &sol).unwrap(), sol);

        assert!(matches!(
            join_lemma_rewrite(&[1], &[0, 2, 3], &f, &sol),
            Err(PipelineError::NotJoin { .. })
        ));
        assert_eq!(
            join_lemma_rewrite(&[], &[0, 1, 2, 3], &f, &sol).unwrap(),
            sol
        );
    }

    #[test]
    fn rewrite_long_cycles() {
        // K2 joined with the path 2..=6; a one-sided 5-cycle is impossible
        // here, so start from the crossing Hamiltonian cycle.
        let g = join(&complete(2), &path(5));
        let ham =
            EdgeSet::within(&g, [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 0)]).unwrap();
        let sol = SpanningSolution::new(g.clone(), ham, ClassLabel::Cactus).unwrap();
        let r = join_lemma_rewrite(&[0, 1], &[2, 3, 4, 5, 6], &g, &sol).unwrap();
        assert!(r.kept().len() >= 7);
        for c in certificate_cycles(&r).unwrap() {
            assert!(c.len() <= 4);
            assert!(c.iter().any(|&v| v < 2) && c.iter().any(|&v| v >= 2));
        }

        let g = join(&complete(1), &cycle(5));
        let c5 = EdgeSet::within(&g, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (0, 3)]).unwrap();
        let sol = SpanningSolution::new(g.clone(), c5, ClassLabel::Cactus).unwrap();
        let r = join_lemma_rewrite(&[0], &[1, 2, 3, 4, 5], &g, &sol).unwrap();
        assert_eq!(r.kept().len(), 7);
        assert!(certificate_cycles(&r)
            .unwrap()
            .iter()
            .all(|c| c.len() == 3 && c.contains(&0)));
    }
}
