use alloc::format;
use alloc::vec::Vec;

use super::{
    check_solution, edge_roles_for, EdgeRole, ReduceError, ReductionInstance, ReductionKind,
    VertexRole,
};
use crate::graph::{subdivide_twice, Edge, EdgeSet, Graph};
use crate::oracle::is_hamiltonian_path;
use crate::recognize::{ClassLabel, Witness};
use crate::solution::SpanningSolution;

/// Double subdivision of `g` with budget `|E(H)| - |V(H)| + 1`.
pub fn hampath_to_caterpillar_instance(g: &Graph) -> ReductionInstance {
    let n = g.n();
    let sub = subdivide_twice(g);
    let gadget = sub.graph;
    let mut vertex_roles: Vec<VertexRole> = (0..n).map(VertexRole::Source).collect();
    for i in 0..g.m() {
        vertex_roles.push(VertexRole::SubdivU { edge: i });
        vertex_roles.push(VertexRole::SubdivV { edge: i });
    }
    let edge_roles = edge_roles_for(&gadget, |e| {
        let edge = (e.v - n) / 2;
        let part = if e.u >= n {
            1
        } else if (e.v - n).is_multiple_of(2) {
            0
        } else {
            2
        };
        EdgeRole::Subdivision { edge, part }
    });
    let budget = gadget.m() as i64 - gadget.n() as i64 + 1;
    ReductionInstance {
        kind: ReductionKind::HampathToCaterpillar,
        source: g.clone(),
        source_budget: None,
        gadget,
        budget,
        trivially_negative: false,
        vertex_roles,
        edge_roles,
    }
}

fn expect_kind(inst: &ReductionInstance) -> Result<(), ReduceError> {
    if inst.kind == ReductionKind::HampathToCaterpillar {
        Ok(())
    } else {
        Err(ReduceError::WrongHost)
    }
}

fn inner(inst: &ReductionInstance, edge: usize) -> (usize, usize) {
    let ue = inst.source.n() + 2 * edge;
    (ue, ue + 1)
}

/// The subdivided path is the spine; each unused source edge leaves its two
/// inner vertices as pendants of its endpoints.
pub fn hampath_to_caterpillar_solution(
    inst: &ReductionInstance,
    path: &[usize],
) -> Result<SpanningSolution, ReduceError> {
    expect_kind(inst)?;
    let g = &inst.source;
    if !is_hamiltonian_path(g, path) {
        return Err(ReduceError::InvalidPath);
    }
    let used: Vec<usize> = path
        .windows(2)
        .map(|w| g.edge_index(w[0], w[1]).expect("path edge"))
        .collect();
    let mut kept = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let (ue, ve) = inner(inst, i);
        kept.push(Edge::new(e.u, ue));
        kept.push(Edge::new(ve, e.v));
        if used.contains(&i) {
            kept.push(Edge::new(ue, ve));
        }
    }
    let kept =
        EdgeSet::within(&inst.gadget, kept.iter().map(|&e| (e.u, e.v))).expect("gadget edges");
    Ok(SpanningSolution::new(
        inst.gadget.clone(),
        kept,
        ClassLabel::Caterpillar,
    )?)
}

/// Hamiltonian path of the source from a spanning caterpillar within budget.
///
/// A spanning tree of the gadget breaks at most one edge of each subdivided
/// path, and the intact paths form the Hamiltonian path. The source vertices
/// are read in order along the spine, extended at an end by a source leaf
/// that hangs off an inner vertex; that order is required to agree with the
/// intact paths.
pub fn caterpillar_to_hampath(
    inst: &ReductionInstance,
    sol: &SpanningSolution,
) -> Result<Vec<usize>, ReduceError> {
    expect_kind(inst)?;
    check_solution(sol, &inst.gadget, ClassLabel::Caterpillar, inst.budget)?;
    let g = &inst.source;
    let n = g.n();
    if n <= 1 {
        return Ok((0..n).collect());
    }
    let t = sol.kept_graph();
    let Some(Witness::Spine(spine)) = sol.certificate().witness() else {
        return Err(ReduceError::Defensive(
            "caterpillar certificate without spine".into(),
        ));
    };

    let mut extended = spine.clone();
    let is_path = t.max_degree() <= 2;
    if !is_path {
        for at_front in [true, false] {
            let end = if at_front {
                extended[0]
            } else {
                *extended.last().unwrap()
            };
            if end < n {
                continue;
            }
            let leaf = t
                .neighbors(end)
                .iter()
                .copied()
                .find(|&w| w < n && t.degree(w) == 1);
            if let Some(leaf) = leaf {
                if at_front {
                    extended.insert(0, leaf);
                } else {
                    extended.push(leaf);
                }
            }
        }
    }
    let mut order: Vec<usize> = extended.iter().copied().filter(|&v| v < n).collect();
    if order.first() > order.last() {
        order.reverse();
    }

    for (i, e) in g.edges().iter().enumerate() {
        let (ue, ve) = inner(inst, i);
        if t.has_edge(e.u, ue) && t.has_edge(ue, ve) && t.has_edge(ve, e.v) {
            let adjacent = order.windows(2).any(|w| Edge::new(w[0], w[1]) == *e);
            if !adjacent {
                return Err(ReduceError::Defensive(format!(
                    "intact subdivided edge {e} is not consecutive on the spine"
                )));
            }
        }
    }
    if !is_hamiltonian_path(g, &order) {
        return Err(ReduceError::Defensive(format!(
            "spine order {order:?} is not a Hamiltonian path"
        )));
    }
    Ok(order)
}
