use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    check_solution, edge_roles_for, EdgeRole, ReduceError, ReductionInstance, ReductionKind,
    VertexRole,
};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::oracle::{check_p3_partition, P3Block, P3Mode};
use crate::recognize::{is_bipartite, ClassLabel, Obstruction, Witness};
use crate::solution::SpanningSolution;

/// Side of every vertex: `true` (side X) for vertices at odd distance from
/// the smallest vertex of their component.
fn x_sides(g: &Graph) -> Vec<bool> {
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let here = side[v].unwrap();
            for &w in g.neighbors(v) {
                if side[w].is_none() {
                    side[w] = Some(!here);
                    queue.push_back(w);
                }
            }
        }
    }
    side.into_iter().map(|s| s.unwrap()).collect()
}

/// Adds `x`, `y`, `x'`, `y'` (ids `n..n+4`), joins `x` to one side and `y`
/// to the other, and closes the 4-cycle `x x' y' y`.
pub fn pip3_to_cactus_instance(g: &Graph) -> Result<ReductionInstance, ReduceError> {
    if let Some(Obstruction::OddCycle(c)) = is_bipartite(g).obstruction() {
        return Err(ReduceError::NotBipartite {
            vertex: c[0],
            odd_cycle: c.clone(),
        });
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(ReduceError::DegreeTooHigh {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let n = g.n();
    let (x, y, xp, yp) = (n, n + 1, n + 2, n + 3);
    let side = x_sides(g);
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for (v, &in_x) in side.iter().enumerate() {
        edges.push(Edge::new(v, if in_x { x } else { y }));
    }
    edges.extend([
        Edge::new(x, y),
        Edge::new(x, xp),
        Edge::new(xp, yp),
        Edge::new(y, yp),
    ]);
    let gadget = Graph::from_edges(n + 4, edges).expect("fresh apex vertices");

    let mut vertex_roles: Vec<VertexRole> = (0..n).map(VertexRole::Source).collect();
    vertex_roles.extend([
        VertexRole::X,
        VertexRole::Y,
        VertexRole::XPrime,
        VertexRole::YPrime,
    ]);
    let edge_roles = edge_roles_for(&gadget, |e| {
        if e.v < n {
            EdgeRole::Source(g.edge_index(e.u, e.v).expect("source edge"))
        } else if e.u < n {
            EdgeRole::ToApex(e.u)
        } else {
            EdgeRole::Apex
        }
    });
    let trivially_negative = !n.is_multiple_of(3);
    let budget = if trivially_negative {
        -1
    } else {
        gadget.m() as i64 - 4 * (n as i64) / 3 - 4
    };
    Ok(ReductionInstance {
        kind: ReductionKind::Pip3ToCactus,
        source: g.clone(),
        source_budget: None,
        gadget,
        budget,
        trivially_negative,
        vertex_roles,
        edge_roles,
    })
}

fn expect_kind(inst: &ReductionInstance) -> Result<(), ReduceError> {
    if inst.kind != ReductionKind::Pip3ToCactus {
        return Err(ReduceError::WrongHost);
    }
    if inst.trivially_negative {
        return Err(ReduceError::TriviallyNegative);
    }
    Ok(())
}

/// Keeps the partition's path edges, joins both ends of each path to the
/// apex vertex on their side, and keeps the four apex edges. Every cycle is
/// then a 4-cycle.
pub fn pip3_solution_to_cactus(
    inst: &ReductionInstance,
    partition: &[P3Block],
) -> Result<SpanningSolution, ReduceError> {
    expect_kind(inst)?;
    let g = &inst.source;
    if !check_p3_partition(g, partition, P3Mode::Spanning) {
        return Err(ReduceError::InvalidPartition(
            "blocks do not partition the vertices into paths",
        ));
    }
    let n = g.n();
    let (x, y, xp, yp) = (n, n + 1, n + 2, n + 3);
    let mut kept = Vec::new();
    for b in partition {
        let [a, m, c] = b.path;
        kept.push(Edge::new(a, m));
        kept.push(Edge::new(m, c));
        for end in [a, c] {
            let apex = if inst.gadget.has_edge(end, x) { x } else { y };
            kept.push(Edge::new(end, apex));
        }
    }
    kept.extend([
        Edge::new(x, y),
        Edge::new(x, xp),
        Edge::new(xp, yp),
        Edge::new(y, yp),
    ]);
    let kept = EdgeSet::within(&inst.gadget, kept.iter().map(|&e| (e.u, e.v)))
        .map_err(|_| ReduceError::Defensive("construction left the gadget".into()))?;
    Ok(SpanningSolution::new(
        inst.gadget.clone(),
        kept,
        ClassLabel::Cactus,
    )?)
}

/// Reads a partition off a spanning cactus within budget. All cycles must be
/// 4-cycles; the one through `x'` is the apex cycle. Each other cycle gives
/// a block: itself minus `x` or `y` when it passes through one of them, and
/// otherwise minus its unique vertex shared with another cycle.
pub fn cactus_to_pip3_solution(
    inst: &ReductionInstance,
    sol: &SpanningSolution,
) -> Result<Vec<P3Block>, ReduceError> {
    expect_kind(inst)?;
    check_solution(sol, &inst.gadget, ClassLabel::Cactus, inst.budget)?;
    let n = inst.source.n();
    let (x, y, xp) = (n, n + 1, n + 2);
    let Some(Witness::Cycles { cycles, .. }) = sol.certificate().witness() else {
        return Err(ReduceError::Defensive(
            "cactus certificate without cycles".into(),
        ));
    };
    if let Some(c) = cycles.iter().find(|c| c.len() != 4) {
        return Err(ReduceError::Defensive(format!(
            "cycle of length {}",
            c.len()
        )));
    }
    let mut on_cycles = vec![0usize; inst.gadget.n()];
    for c in cycles {
        for &v in c {
            on_cycles[v] += 1;
        }
    }
    let mut blocks = Vec::new();
    for c in cycles.iter().filter(|c| !c.contains(&xp)) {
        let drop = if c.contains(&x) {
            x
        } else if c.contains(&y) {
            y
        } else {
            let shared: Vec<usize> = c.iter().copied().filter(|&v| on_cycles[v] > 1).collect();
            if shared.len() != 1 {
                return Err(ReduceError::Defensive(format!(
                    "source cycle {c:?} shares {} vertices with other cycles",
                    shared.len()
                )));
            }
            shared[0]
        };
        let i = c.iter().position(|&v| v == drop).unwrap();
        let mut path = [c[(i + 1) % 4], c[(i + 2) % 4], c[(i + 3) % 4]];
        if path[0] > path[2] {
            path.reverse();
        }
        if path.iter().any(|&v| v >= n) {
            return Err(ReduceError::Defensive(format!(
                "cycle {c:?} leaves the source after removal"
            )));
        }
        blocks.push(P3Block { path });
    }
    blocks.sort_by_key(|b| b.sorted());
    if !check_p3_partition(&inst.source, &blocks, P3Mode::Spanning) {
        return Err(ReduceError::Defensive(
            "extracted blocks do not partition the source".into(),
        ));
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn small_instances() {
        let inst = pip3_to_cactus_instance(&path(3)).unwrap();
        assert_eq!((inst.gadget.n(), inst.gadget.m(), inst.budget), (7, 9, 1));
        assert!(
            inst.gadget.has_edge(1, 3) && inst.gadget.has_edge(0, 4) && inst.gadget.has_edge(2, 4)
        );
        let inst = pip3_to_cactus_instance(&cycle(6)).unwrap();
        assert_eq!((inst.gadget.n(), inst.gadget.m(), inst.budget), (10, 16, 4));
        assert!(matches!(
            pip3_to_cactus_instance(&complete(3)),
            Err(ReduceError::NotBipartite { .. })
        ));
        assert!(matches!(
            pip3_to_cactus_instance(&star(4)),
            Err(ReduceError::DegreeTooHigh {
                vertex: 0,
                degree: 4
            })
        ));
        let neg = pip3_to_cactus_instance(&path(4)).unwrap();
        assert!(neg.trivially_negative && neg.budget == -1);
        assert!(neg.is_consistent());
    }

    #[test]
    fn forward_and_back() {
        let inst = pip3_to_cactus_instance(&path(3)).unwrap();
        let part = [P3Block { path: [0, 1, 2] }];
        let sol = pip3_solution_to_cactus(&inst, &part).unwrap();
        assert_eq!(sol.kept().len(), 8);
        assert_eq!(sol.deletions() as i64, inst.budget);
        let Some(Witness::Cycles { cycles, .. }) = sol.certificate().witness() else {
            panic!("no cycles");
        };
        assert_eq!(cycles.len(), 2);
        assert_eq!(cactus_to_pip3_solution(&inst, &sol).unwrap(), part.to_vec());

        let inst = pip3_to_cactus_instance(&path(6)).unwrap();
        let part = [P3Block { path: [0, 1, 2] }, P3Block { path: [3, 4, 5] }];
        let sol = pip3_solution_to_cactus(&inst, &part).unwrap();
        assert_eq!((sol.kept().len(), sol.host().n()), (12, 10));
        assert_eq!(cactus_to_pip3_solution(&inst, &sol).unwrap(), part.to_vec());
    }

    #[test]
    fn rejects_over_budget() {
        let inst = pip3_to_cactus_instance(&path(3)).unwrap();
        let tree = EdgeSet::within(
            &inst.gadget,
            [(0, 1), (1, 2), (1, 3), (0, 4), (3, 5), (4, 6)],
        )
        .unwrap();
        let sol = SpanningSolution::new(inst.gadget.clone(), tree, ClassLabel::Cactus).unwrap();
        assert!(matches!(
            cactus_to_pip3_solution(&inst, &sol),
            Err(ReduceError::BudgetExceeded {
                deletions: 3,
                budget: 1
            })
        ));
        let bad = [P3Block { path: [0, 2, 1] }];
        assert!(pip3_solution_to_cactus(&inst, &bad).is_err());
    }
}
