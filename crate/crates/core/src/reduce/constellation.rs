use alloc::vec;
use alloc::vec::Vec;

use super::{check_solution, ReduceError};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::oracle::{min_dominating_set, Limits};
use crate::recognize::ClassLabel;
use crate::solution::SpanningSolution;

/// Stars centered at `d`: every other vertex keeps the edge to its
/// smallest-index neighbor in `d`.
pub fn domset_to_constellation(g: &Graph, d: &[usize]) -> Result<SpanningSolution, ReduceError> {
    let mut in_d = vec![false; g.n()];
    for &v in d {
        if v >= g.n() || in_d[v] {
            return Err(ReduceError::InvalidVertex { vertex: v });
        }
        in_d[v] = true;
    }
    let mut kept = Vec::new();
    for v in 0..g.n() {
        if in_d[v] {
            continue;
        }
        let Some(&c) = g.neighbors(v).iter().find(|&&w| in_d[w]) else {
            return Err(ReduceError::NotDominating { vertex: v });
        };
        kept.push(Edge::new(v, c));
    }
    let kept = EdgeSet::within(g, kept.iter().map(|&e| (e.u, e.v))).expect("host edges");
    Ok(SpanningSolution::new(
        g.clone(),
        kept,
        ClassLabel::Constellation,
    )?)
}

/// One center per star: the vertex of degree above one, the smaller end of
/// a single edge, or the isolated vertex itself. Ascending.
pub fn constellation_to_domset(
    g: &Graph,
    sol: &SpanningSolution,
) -> Result<Vec<usize>, ReduceError> {
    check_solution(sol, g, ClassLabel::Constellation, i64::MAX)?;
    let f = sol.kept_graph();
    let centers = (0..f.n())
        .filter(|&v| match f.degree(v) {
            0 => true,
            1 => {
                let w = f.neighbors(v)[0];
                f.degree(w) == 1 && v < w
            }
            _ => true,
        })
        .collect();
    Ok(centers)
}

/// Optimal constellation deletion from a minimum dominating set.
pub fn min_constellation_deletion(
    g: &Graph,
    limits: &Limits,
) -> Result<SpanningSolution, ReduceError> {
    let d = min_dominating_set(g, limits)?;
    domset_to_constellation(g, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn examples() {
        let s = domset_to_constellation(&star(5), &[0]).unwrap();
        assert_eq!(s.deletions(), 0);
        let c4 = cycle(4);
        let s = domset_to_constellation(&c4, &[0, 2]).unwrap();
        assert_eq!((s.kept().len(), s.deletions()), (2, 2));
        assert_eq!(constellation_to_domset(&c4, &s).unwrap().len(), 2);
        assert!(matches!(
            domset_to_constellation(&path(4), &[1]),
            Err(ReduceError::NotDominating { vertex: 3 })
        ));
        let l = Limits::default();
        assert_eq!(
            min_constellation_deletion(&path(4), &l)
                .unwrap()
                .deletions(),
            1
        );
        assert_eq!(
            min_constellation_deletion(&star(5), &l)
                .unwrap()
                .deletions(),
            0
        );
        assert_eq!(min_constellation_deletion(&c4, &l).unwrap().deletions(), 2);
    }

    #[test]
    fn two_edge_stars() {
        let c4 = cycle(4);
        let kept = EdgeSet::within(&c4, [(0, 1), (2, 3)]).unwrap();
        let s = SpanningSolution::new(c4.clone(), kept, ClassLabel::Constellation).unwrap();
        assert_eq!(constellation_to_domset(&c4, &s).unwrap(), vec![0, 2]);
    }
}
