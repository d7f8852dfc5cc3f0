//! Maximum spanning cactus of a chordal graph through its triangle
//! hypergraph.
//!
//! A maximum Berge-acyclic family of triangles, together with the edges that
//! lie on no triangle, forms a forest of cacti whose cycles are all
//! triangles. Joining its components with further host edges yields a
//! maximum spanning cactus. The maximization is an exact branch and bound.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{component_labels, connected_components, Edge, EdgeSet, Graph, UnionFind};
use crate::oracle::{max_spanning_cactus_by_edges, Limits, OracleError};
use crate::pipeline::{certificate_cycles, CactusOptions, PipelineError};
use crate::recognize::{is_chordal, ClassLabel};
use crate::solution::SpanningSolution;

/// All triangles of `host`, each sorted, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleHypergraph {
    pub host: Graph,
    pub hyperedges: Vec<[usize; 3]>,
}

/// A subfamily of a triangle hypergraph, by hyperedge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeSelection {
    pub hypergraph: TriangleHypergraph,
    pub chosen: Vec<usize>,
}

impl BergeSelection {
    pub fn triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.chosen.iter().map(|&i| self.hypergraph.hyperedges[i])
    }
}

/// A Berge-cycle `(E_1, x_1, ..., E_k, x_k)`: `x_i` lies in `E_i` and
/// `E_{i+1}`, indices modulo `k`. Hyperedges are given by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeCycle {
    pub hyperedges: Vec<usize>,
    pub vertices: Vec<usize>,
}

pub fn triangle_hypergraph(g: &Graph) -> TriangleHypergraph {
    let mut hyperedges = Vec::new();
    for e in g.edges() {
        for &w in g.neighbors(e.u) {
            if w > e.v && g.has_edge(e.v, w) {
                hyperedges.push([e.u, e.v, w]);
            }
        }
    }
    hyperedges.sort_unstable();
    TriangleHypergraph {
        host: g.clone(),
        hyperedges,
    }
}

/// Edges on no triangle.
pub fn non_triangle_edges(g: &Graph) -> EdgeSet {
    let d = g
        .edges()
        .iter()
        .filter(|e| !g.neighbors(e.u).iter().any(|&w| g.has_edge(e.v, w)))
        .map(|e| (e.u, e.v));
    EdgeSet::within(g, d).expect("host edges")
}

/// First Berge-cycle met while building the vertex-hyperedge incidence
/// graph, hyperedge by hyperedge.
pub fn find_berge_cycle(n: usize, hyperedges: &[&[usize]]) -> Option<BergeCycle> {
    let total = n + hyperedges.len();
    let mut uf = UnionFind::new(total);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (j, e) in hyperedges.iter().enumerate() {
        let node = n + j;
        for &x in e.iter() {
            if uf.union(x, node) {
                adj[x].push(node);
                adj[node].push(x);
                continue;
            }
            let path = forest_path(&adj, x, node);
            let mut hyper = Vec::new();
            let mut verts = Vec::new();
            for (i, &p) in path.iter().enumerate().skip(1) {
                if i % 2 == 1 {
                    hyper.push(p - n);
                } else {
                    verts.push(p);
                }
            }
            verts.push(x);
            return Some(BergeCycle {
                hyperedges: hyper,
                vertices: verts,
            });
        }
    }
    None
}

fn forest_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &w in &adj[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

pub fn is_berge_acyclic(sel: &BergeSelection) -> Result<(), BergeCycle> {
    let tris: Vec<[usize; 3]> = sel.triangles().collect();
    let refs: Vec<&[usize]> = tris.iter().map(|t| &t[..]).collect();
    match find_berge_cycle(sel.hypergraph.host.n(), &refs) {
        None => Ok(()),
        Some(mut c) => {
            for h in &mut c.hyperedges {
                *h = sel.chosen[*h];
            }
            Err(c)
        }
    }
}

struct Search<'a> {
    tris: &'a [[usize; 3]],
    host_comp: Vec<usize>,
    best: Vec<usize>,
    cur: Vec<usize>,
    cap: usize,
    nodes: u64,
    node_limit: u64,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn admissible(parent: &mut [usize], t: [usize; 3]) -> Option<[usize; 3]> {
        let r = [find(parent, t[0]), find(parent, t[1]), find(parent, t[2])];
        (r[0] != r[1] && r[1] != r[2] && r[0] != r[2]).then_some(r)
    }

    /// Each further triangle merges three classes of one host component.
    fn bound(&self, parent: &mut [usize], from: usize) -> usize {
        let mut admissible = 0;
        let mut classes: Vec<usize> = Vec::new();
        for &t in &self.tris[from..] {
            if let Some(r) = Self::admissible(parent, t) {
                admissible += 1;
                classes.extend(r);
            }
        }
        classes.sort_unstable();
        classes.dedup();
        let mut per_comp: Vec<(usize, usize)> = Vec::new();
        for r in classes {
            let c = self.host_comp[r];
            match per_comp.iter_mut().find(|(k, _)| *k == c) {
                Some((_, cnt)) => *cnt += 1,
                None => per_comp.push((c, 1)),
            }
        }
        let merges: usize = per_comp.iter().map(|&(_, k)| (k - 1) / 2).sum();
        admissible.min(merges)
    }

    fn run(&mut self, parent: &mut Vec<usize>, from: usize) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(OracleError::SizeLimit {
                what: "search nodes",
                size: usize::try_from(self.nodes).unwrap_or(usize::MAX),
                limit: usize::try_from(self.node_limit).unwrap_or(usize::MAX),
            });
        }
        if self.cur.len() > self.best.len() {
            self.best = self.cur.clone();
        }
        if self.best.len() == self.cap {
            return Ok(());
        }
        let Some(i) =
            (from..self.tris.len()).find(|&i| Self::admissible(parent, self.tris[i]).is_some())
        else {
            return Ok(());
        };
        if self.cur.len() + self.bound(parent, i) <= self.best.len() {
            return Ok(());
        }
        let r = Self::admissible(parent, self.tris[i]).unwrap();
        let mut with = parent.clone();
        let root = r[0].min(r[1]).min(r[2]);
        for x in r {
            with[x] = root;
        }
        self.cur.push(i);
        self.run(&mut with, i + 1)?;
        self.cur.pop();
        if self.best.len() == self.cap {
            return Ok(());
        }
        self.run(parent, i + 1)
    }
}

/// A largest Berge-acyclic family of triangles; ties go to the
/// lexicographically first family in canonical order.
pub fn max_berge_acyclic(
    h: &TriangleHypergraph,
    limits: &Limits,
) -> Result<BergeSelection, OracleError> {
    crate::oracle::within("hyperedge count", h.hyperedges.len(), limits.hyperedges)?;
    let n = h.host.n();
    let mut search = Search {
        tris: &h.hyperedges,
        host_comp: component_labels(&h.host),
        best: Vec::new(),
        cur: Vec::new(),
        cap: usize::MAX,
        nodes: 0,
        node_limit: limits.search_nodes,
    };
    let mut parent: Vec<usize> = (0..n).collect();
    search.cap = search.bound(&mut parent, 0);
    search.run(&mut parent, 0)?;
    Ok(BergeSelection {
        hypergraph: h.clone(),
        chosen: search.best,
    })
}

/// The chosen triangles plus `d` on the host's vertex set, checked to be a
/// forest of cacti whose cycles are all triangles.
pub fn realize(g: &Graph, sel: &BergeSelection, d: &EdgeSet) -> Result<Graph, PipelineError> {
    if sel.hypergraph.host != *g {
        return Err(PipelineError::WrongHost);
    }
    let mut edges: Vec<(usize, usize)> = d.iter().map(Edge::into).collect();
    for [a, b, c] in sel.triangles() {
        edges.extend([(a, b), (b, c), (a, c)]);
    }
    let kept = EdgeSet::within(g, edges).map_err(|_| PipelineError::WrongHost)?;
    let sol = SpanningSolution::new(g.clone(), kept, ClassLabel::ForestOfCacti).map_err(|e| {
        PipelineError::Defensive(format!("realized graph is not a forest of cacti: {e}"))
    })?;
    if let Some(c) = certificate_cycles(&sol)?.iter().find(|c| c.len() != 3) {
        return Err(PipelineError::Defensive(format!(
            "realized graph has a cycle of length {}",
            c.len()
        )));
    }
    Ok(sol.kept_graph())
}

/// Adds edges of `g` between components of `g_prime`, smallest canonical
/// edge first, until the components match those of `g`.
pub fn join_components(g: &Graph, g_prime: &Graph) -> Result<SpanningSolution, PipelineError> {
    join_components_by(g, g_prime, g.edges())
}

/// As [`join_components`], trying candidate edges in the given order.
pub fn join_components_by(
    g: &Graph,
    g_prime: &Graph,
    order: &[Edge],
) -> Result<SpanningSolution, PipelineError> {
    if g_prime.n() != g.n() || g_prime.edges().iter().any(|e| !g.has_edge(e.u, e.v)) {
        return Err(PipelineError::WrongHost);
    }
    let mut uf = UnionFind::new(g.n());
    for e in g_prime.edges() {
        uf.union(e.u, e.v);
    }
    let mut kept: Vec<(usize, usize)> = g_prime.edges().iter().map(|&e| e.into()).collect();
    for &e in order {
        if !g.has_edge(e.u, e.v) {
            return Err(PipelineError::WrongHost);
        }
        if uf.union(e.u, e.v) {
            kept.push(e.into());
        }
    }
    let comps = connected_components(g).len();
    let label = if comps <= 1 {
        ClassLabel::Cactus
    } else {
        ClassLabel::ForestOfCacti
    };
    let kept = EdgeSet::within(g, kept).expect("host edges");
    let sol = SpanningSolution::new(g.clone(), kept, label)
        .map_err(|e| PipelineError::Defensive(format!("joined graph is not a {label}: {e}")))?;
    if connected_components(&sol.kept_graph()).len() != comps {
        return Err(PipelineError::Defensive(
            "no edge joins two remaining components".into(),
        ));
    }
    Ok(sol)
}

fn check_spanning_cactus(g: &Graph, sol: &SpanningSolution) -> Result<(), PipelineError> {
    if sol.host() != g {
        return Err(PipelineError::WrongHost);
    }
    if !matches!(sol.label(), ClassLabel::Cactus | ClassLabel::ForestOfCacti) || !sol.verify() {
        return Err(PipelineError::Defensive(
            "input is not a certified cactus".into(),
        ));
    }
    Ok(())
}

/// One chord swap on a longest cycle of length above three, or `None` when
/// every cycle is a triangle. For the cycle `x_1 x_2 ... x_k` with chord
/// `x_1 x_i`, the edge `x_1 x_2` is replaced by the chord, which leaves the
/// shorter cycle `x_1 x_i ... x_k`.
pub fn chord_swap(
    g: &Graph,
    sol: &SpanningSolution,
) -> Result<Option<SpanningSolution>, PipelineError> {
    check_spanning_cactus(g, sol)?;
    let cycles = certificate_cycles(sol)?;
    let Some(c) =
        cycles
            .iter()
            .filter(|c| c.len() > 3)
            .fold(None::<&Vec<usize>>, |acc, c| match acc {
                Some(a) if a.len() >= c.len() => Some(a),
                _ => Some(c),
            })
    else {
        return Ok(None);
    };
    let k = c.len();
    let pos = |v: usize| c.iter().position(|&w| w == v).unwrap();
    let chord = g
        .edges()
        .iter()
        .find(|e| c.contains(&e.u) && c.contains(&e.v) && !sol.kept().contains(**e));
    let Some(chord) = chord else {
        return Err(PipelineError::Defensive(format!(
            "cycle {c:?} of length {k} has no chord"
        )));
    };
    // Dropping either cycle edge at the smaller chord end leaves one of the
    // two cycles through the chord; keep the shorter, then the smaller.
    let (a, b) = (pos(chord.u), pos(chord.v));
    let arc = |from: usize, to: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(c[i]);
            if i == to {
                return out;
            }
            i = (i + 1) % k;
        }
    };
    let forward = arc(a, b);
    let backward = arc(b, a);
    let key = |cyc: &Vec<usize>| {
        let mut s = cyc.clone();
        s.sort_unstable();
        (s.len(), s)
    };
    let removed = if key(&forward) <= key(&backward) {
        Edge::new(c[a], c[(a + k - 1) % k])
    } else {
        Edge::new(c[a], c[(a + 1) % k])
    };
    let mut kept: Vec<Edge> = sol.kept().iter().filter(|&e| e != removed).collect();
    kept.push(*chord);
    let kept = EdgeSet::within(g, kept.iter().map(|&e| (e.u, e.v))).expect("host edges");
    let next = SpanningSolution::new(g.clone(), kept, sol.label())
        .map_err(|e| PipelineError::Defensive(format!("chord swap broke the cactus: {e}")))?;
    Ok(Some(next))
}

/// Repeated chord swaps until every cycle is a triangle. The edge count is
/// unchanged.
pub fn triangularize(g: &Graph, sol: &SpanningSolution) -> Result<SpanningSolution, PipelineError> {
    let mut cur = sol.clone();
    while let Some(next) = chord_swap(g, &cur)? {
        cur = next;
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalSolution {
    pub solution: SpanningSolution,
    pub selection: BergeSelection,
    /// Edges added by the join step, in the order added.
    pub joins: Vec<Edge>,
}

/// The full pipeline on a chordal `g`: triangle hypergraph, maximum
/// Berge-acyclic selection, realization with the triangle-free edges, and
/// joins.
pub fn max_spanning_cactus_chordal(
    g: &Graph,
    options: &CactusOptions,
    limits: &Limits,
) -> Result<ChordalSolution, PipelineError> {
    let cert = is_chordal(g);
    if let Some(o) = cert.obstruction() {
        return Err(PipelineError::WrongClass {
            expected: "chordal",
            obstruction: o.clone(),
        });
    }
    let comps = connected_components(g).len();
    if comps > 1 && !options.forest {
        return Err(PipelineError::Disconnected { components: comps });
    }
    let h = triangle_hypergraph(g);
    let selection = max_berge_acyclic(&h, limits)?;
    let realized = realize(g, &selection, &non_triangle_edges(g))?;
    let solution = join_components(g, &realized)?;
    let expected = g.n() - comps + selection.chosen.len();
    if solution.kept().len() != expected {
        return Err(PipelineError::Defensive(format!(
            "kept {} edges, expected {expected}",
            solution.kept().len()
        )));
    }
    if options.cross_check {
        let oracle = max_spanning_cactus_by_edges(g, comps <= 1, limits)?;
        if oracle.kept().len() != solution.kept().len() {
            return Err(PipelineError::Suboptimal {
                found: solution.kept().len(),
                optimum: oracle.kept().len(),
            });
        }
    }
    let joins = solution
        .kept()
        .iter()
        .filter(|e| !realized.has_edge(e.u, e.v))
        .collect();
    Ok(ChordalSolution {
        solution,
        selection,
        joins,
    })
}
