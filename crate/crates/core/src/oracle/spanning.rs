use alloc::vec;
use alloc::vec::Vec;

use super::{within, Limits, OracleError};
use crate::graph::{connected_components, girth, Edge, EdgeSet, Graph};
use crate::recognize::{belongs, ClassLabel};
use crate::solution::SpanningSolution;

/// Maximum-edge spanning subgraph of `g` in `label`.
///
/// Classes closed under edge deletion use branch and bound over the edges
/// in canonical order (include before exclude); cacti with more edges than
/// that search allows fall back to the cycle-family dynamic program.
/// Caterpillars reduce to a search for a dominating path. Everything else
/// enumerates edge subsets by decreasing size.
pub fn max_spanning_in_class(
    g: &Graph,
    label: ClassLabel,
    limits: &Limits,
) -> Result<SpanningSolution, OracleError> {
    if label.requires_connected() && !g.is_connected() {
        return Err(OracleError::Infeasible("host graph is disconnected"));
    }
    let kept = match label {
        ClassLabel::Caterpillar => {
            let spine =
                dominating_path(g, limits)?.ok_or(OracleError::Infeasible("no dominating path"))?;
            caterpillar_on_spine(g, &spine)
        }
        ClassLabel::Cactus | ClassLabel::ForestOfCacti => {
            let connected = label == ClassLabel::Cactus;
            if g.m() > limits.pruned_edges && g.n() <= limits.cycle_dp_vertices {
                return super::max_spanning_cactus_by_cycles(g, connected, limits);
            }
            return max_spanning_cactus_by_edges(g, connected, limits);
        }
        ClassLabel::LinearForest => {
            within("edge count", g.m(), limits.pruned_edges)?;
            branch_and_bound(g, LinearState::new(g.n()), forest_cap(g))
        }
        ClassLabel::Constellation => {
            within("edge count", g.m(), limits.pruned_edges)?;
            branch_and_bound(g, StarState::new(g.n()), forest_cap(g))
        }
        ClassLabel::Bipartite | ClassLabel::Subcubic => {
            within("edge count", g.m(), limits.pruned_edges)?;
            branch_and_bound(g, GenericState::new(g.n(), label), g.m())
        }
        _ => {
            within("edge count", g.m(), limits.subset_edges)?;
            let mut pred = |h: &Graph| belongs(h, label).map_err(OracleError::from);
            largest_subset(g, &mut pred)?
                .ok_or(OracleError::Infeasible("no spanning subgraph in the class"))?
        }
    };
    Ok(SpanningSolution::new(g.clone(), kept, label)?)
}

/// Maximum spanning cactus (or forest of cacti) by the edge branch and
/// bound alone.
pub fn max_spanning_cactus_by_edges(
    g: &Graph,
    connected: bool,
    limits: &Limits,
) -> Result<SpanningSolution, OracleError> {
    if connected && !g.is_connected() {
        return Err(OracleError::Infeasible("host graph is disconnected"));
    }
    within("edge count", g.m(), limits.pruned_edges)?;
    let kept = branch_and_bound(g, CactusState::new(g), cactus_cap(g));
    let label = if connected {
        ClassLabel::Cactus
    } else {
        ClassLabel::ForestOfCacti
    };
    Ok(SpanningSolution::new(g.clone(), kept, label)?)
}

/// Largest edge set `S` with `pred(V(g), S)`, by subset enumeration.
pub fn max_spanning_with_predicate(
    g: &Graph,
    pred: &mut Pred<'_>,
    limits: &Limits,
) -> Result<Option<EdgeSet>, OracleError> {
    within("edge count", g.m(), limits.subset_edges)?;
    largest_subset(g, pred)
}

/// Some `k`-edge spanning subgraph satisfying `pred`, found by enumerating
/// `k`-subsets in lexicographic order.
pub fn exists_spanning_subgraph_with_edges(
    g: &Graph,
    pred: &mut Pred<'_>,
    k: usize,
    limits: &Limits,
) -> Result<Option<EdgeSet>, OracleError> {
    if k > g.m() {
        return Ok(None);
    }
    let count = binomial(g.m(), k);
    if count > limits.max_combinations {
        return Err(OracleError::SizeLimit {
            what: "edge subsets",
            size: usize::try_from(count).unwrap_or(usize::MAX),
            limit: usize::try_from(limits.max_combinations).unwrap_or(usize::MAX),
        });
    }
    subsets_of_size(g, k, pred)
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// A spanning-subgraph test that may fail, for instance when an external
/// recognizer cannot be run.
pub type Pred<'a> = dyn FnMut(&Graph) -> Result<bool, OracleError> + 'a;

fn largest_subset(g: &Graph, pred: &mut Pred<'_>) -> Result<Option<EdgeSet>, OracleError> {
    for k in (0..=g.m()).rev() {
        if let Some(found) = subsets_of_size(g, k, pred)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn subsets_of_size(
    g: &Graph,
    k: usize,
    pred: &mut Pred<'_>,
) -> Result<Option<EdgeSet>, OracleError> {
    let edges = g.edges();
    let m = edges.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let chosen = EdgeSet::from_edges_unchecked(idx.iter().map(|&i| edges[i]).collect());
        if pred(&g.spanning_subgraph(&chosen))? {
            return Ok(Some(chosen));
        }
        // Advance to the next combination in lexicographic order.
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return Ok(None);
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Upper bound on the edges of a spanning forest of cacti: each component on
/// `s` vertices holds at most `s - 1` tree edges plus one extra edge per
/// `girth - 1` of them.
pub(crate) fn cactus_cap(g: &Graph) -> usize {
    let Some(gir) = girth(g) else {
        return g.m();
    };
    connected_components(g)
        .iter()
        .map(|c| (c.len() - 1) + (c.len() - 1) / (gir - 1))
        .sum::<usize>()
        .min(g.m())
}

fn forest_cap(g: &Graph) -> usize {
    g.n() - connected_components(g).len()
}

/// Incremental membership state for a class closed under edge deletion.
trait Partial {
    /// Adds `e` if the class admits it.
    fn push(&mut self, e: Edge) -> bool;
    /// Undoes the last successful `push`.
    fn pop(&mut self);
    /// Upper bound on the final edge count given the current state.
    fn bound(&self) -> usize {
        usize::MAX
    }
    fn admits(&mut self, e: Edge) -> bool {
        let ok = self.push(e);
        if ok {
            self.pop();
        }
        ok
    }
}

struct Engine<'a, P> {
    edges: &'a [Edge],
    state: P,
    kept: Vec<Edge>,
    best: Vec<Edge>,
    cap: usize,
}

impl<P: Partial> Engine<'_, P> {
    fn done(&self) -> bool {
        self.best.len() >= self.cap
    }

    fn run(&mut self, idx: usize) {
        if self.kept.len() > self.best.len() {
            self.best.clone_from(&self.kept);
        }
        if self.done() || idx == self.edges.len() {
            return;
        }
        let best = self.best.len();
        if self.kept.len() + (self.edges.len() - idx) <= best || self.state.bound() <= best {
            return;
        }
        let mut open = 0;
        for j in idx..self.edges.len() {
            if self.state.admits(self.edges[j]) {
                open += 1;
            }
        }
        if self.kept.len() + open <= best {
            return;
        }
        let e = self.edges[idx];
        if self.state.push(e) {
            self.kept.push(e);
            self.run(idx + 1);
            self.kept.pop();
            self.state.pop();
        }
        if !self.done() && self.kept.len() + (self.edges.len() - idx - 1) > self.best.len() {
            self.run(idx + 1);
        }
    }
}

fn branch_and_bound<P: Partial>(g: &Graph, state: P, cap: usize) -> EdgeSet {
    let mut engine = Engine {
        edges: g.edges(),
        state,
        kept: Vec::new(),
        best: Vec::new(),
        cap,
    };
    engine.run(0);
    EdgeSet::from_edges_unchecked(engine.best)
}

/// Forest of cacti. An edge `uv` may be added when `u` and `v` lie in
/// different components, or when they are joined by a path of bridges
/// (which is then the unique `u`-`v` path and closes a single new cycle).
struct CactusState {
    n: usize,
    adj: Vec<Vec<(usize, usize)>>,
    on_cycle: Vec<bool>,
    history: Vec<(Edge, Vec<usize>)>,
    cycles: usize,
    slots: usize,
    host_slots: usize,
    girth: usize,
}

impl CactusState {
    fn new(g: &Graph) -> Self {
        CactusState {
            n: g.n(),
            adj: vec![Vec::new(); g.n()],
            on_cycle: Vec::new(),
            history: Vec::new(),
            cycles: 0,
            slots: 0,
            host_slots: g.n() - connected_components(g).len(),
            girth: girth(g).unwrap_or(usize::MAX),
        }
    }

    /// Edge ids on a `u`-`v` path using only edges of the given kind.
    fn path(&self, u: usize, v: usize, bridges_only: bool) -> Option<Vec<usize>> {
        let mut via = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            if x == v {
                let mut ids = Vec::new();
                let mut cur = v;
                while cur != u {
                    let id = via[cur];
                    ids.push(id);
                    let e = self.history[id].0;
                    cur = e.other(cur);
                }
                return Some(ids);
            }
            for &(y, id) in &self.adj[x] {
                if !seen[y] && !(bridges_only && self.on_cycle[id]) {
                    seen[y] = true;
                    via[y] = id;
                    stack.push(y);
                }
            }
        }
        None
    }
}

impl Partial for CactusState {
    fn push(&mut self, e: Edge) -> bool {
        let marked = match self.path(e.u, e.v, true) {
            Some(ids) => ids,
            None if self.path(e.u, e.v, false).is_some() => return false,
            None => Vec::new(),
        };
        let id = self.history.len();
        if !marked.is_empty() {
            for &i in &marked {
                self.on_cycle[i] = true;
            }
            self.cycles += 1;
            self.slots += marked.len();
        }
        self.on_cycle.push(!marked.is_empty());
        self.adj[e.u].push((e.v, id));
        self.adj[e.v].push((e.u, id));
        self.history.push((e, marked));
        true
    }

    fn pop(&mut self) {
        let (e, marked) = self.history.pop().expect("pop without push");
        self.adj[e.u].pop();
        self.adj[e.v].pop();
        self.on_cycle.pop();
        if !marked.is_empty() {
            for &i in &marked {
                self.on_cycle[i] = false;
            }
            self.cycles -= 1;
            self.slots -= marked.len();
        }
    }

    fn bound(&self) -> usize {
        if self.girth == usize::MAX {
            return usize::MAX;
        }
        self.host_slots + self.cycles + (self.host_slots - self.slots) / (self.girth - 1)
    }
}

/// Linear forest: degrees stay at most two and no cycle closes.
struct LinearState {
    adj: Vec<Vec<usize>>,
    history: Vec<Edge>,
}

impl LinearState {
    fn new(n: usize) -> Self {
        LinearState {
            adj: vec![Vec::new(); n],
            history: Vec::new(),
        }
    }

    /// The other end of the path that ends at `u`.
    fn far_end(&self, u: usize) -> usize {
        let (mut prev, mut cur) = (usize::MAX, u);
        while let Some(&next) = self.adj[cur].iter().find(|&&w| w != prev) {
            prev = cur;
            cur = next;
        }
        cur
    }
}

impl Partial for LinearState {
    fn push(&mut self, e: Edge) -> bool {
        if self.adj[e.u].len() >= 2 || self.adj[e.v].len() >= 2 || self.far_end(e.u) == e.v {
            return false;
        }
        self.adj[e.u].push(e.v);
        self.adj[e.v].push(e.u);
        self.history.push(e);
        true
    }

    fn pop(&mut self) {
        let e = self.history.pop().expect("pop without push");
        self.adj[e.u].pop();
        self.adj[e.v].pop();
    }
}

/// Star forest: an edge may join a single vertex to the center of another
/// star (both ends of a `K2` count as centers).
struct StarState {
    adj: Vec<Vec<usize>>,
    history: Vec<Edge>,
}

impl StarState {
    fn new(n: usize) -> Self {
        StarState {
            adj: vec![Vec::new(); n],
            history: Vec::new(),
        }
    }

    fn is_center(&self, v: usize) -> bool {
        match self.adj[v].len() {
            0 => true,
            1 => self.adj[self.adj[v][0]].len() == 1,
            _ => true,
        }
    }
}

impl Partial for StarState {
    fn push(&mut self, e: Edge) -> bool {
        let ok = (self.adj[e.u].is_empty() && self.is_center(e.v))
            || (self.adj[e.v].is_empty() && self.is_center(e.u));
        if !ok {
            return false;
        }
        self.adj[e.u].push(e.v);
        self.adj[e.v].push(e.u);
        self.history.push(e);
        true
    }

    fn pop(&mut self) {
        let e = self.history.pop().expect("pop without push");
        self.adj[e.u].pop();
        self.adj[e.v].pop();
    }
}

/// Any edge-hereditary class, checked with its recognizer.
struct GenericState {
    n: usize,
    label: ClassLabel,
    kept: Vec<Edge>,
}

impl GenericState {
    fn new(n: usize, label: ClassLabel) -> Self {
        GenericState {
            n,
            label,
            kept: Vec::new(),
        }
    }
}

impl Partial for GenericState {
    fn push(&mut self, e: Edge) -> bool {
        self.kept.push(e);
        let g = Graph::from_edges(self.n, self.kept.iter().copied()).expect("edges of the host");
        let ok = belongs(&g, self.label).unwrap_or(false);
        if !ok {
            self.kept.pop();
        }
        ok
    }

    fn pop(&mut self) {
        self.kept.pop();
    }
}

/// Spine plus every other vertex attached to its smallest spine neighbor.
fn caterpillar_on_spine(g: &Graph, spine: &[usize]) -> EdgeSet {
    let mut on_spine = vec![false; g.n()];
    for &v in spine {
        on_spine[v] = true;
    }
    let mut edges: Vec<Edge> = spine.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
    for v in 0..g.n() {
        if !on_spine[v] {
            let s = *g
                .neighbors(v)
                .iter()
                .find(|&&w| on_spine[w])
                .expect("spine dominates");
            edges.push(Edge::new(v, s));
        }
    }
    EdgeSet::from_edges_unchecked(edges)
}

/// A path whose closed neighborhood covers every vertex, trying start
/// vertices and extensions in ascending order.
pub fn dominating_path(g: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>, OracleError> {
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut s = SpineSearch {
        g,
        path: Vec::new(),
        on_path: vec![false; g.n()],
        cover: vec![0; g.n()],
        undominated: g.n(),
        nodes: 0,
        limit: limits.search_nodes,
    };
    for start in 0..g.n() {
        if s.extend(start)? {
            return Ok(Some(s.path));
        }
    }
    Ok(None)
}

struct SpineSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    on_path: Vec<bool>,
    cover: Vec<u32>,
    undominated: usize,
    nodes: u64,
    limit: u64,
}

impl SpineSearch<'_> {
    fn touch(&mut self, v: usize, add: bool) {
        let g = self.g;
        for w in core::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if add {
                if self.cover[w] == 0 {
                    self.undominated -= 1;
                }
                self.cover[w] += 1;
            } else {
                self.cover[w] -= 1;
                if self.cover[w] == 0 {
                    self.undominated += 1;
                }
            }
        }
    }

    /// Every undominated vertex must still have a closed neighbor reachable
    /// from the path's end through unused vertices.
    fn hopeless(&self, end: usize) -> bool {
        let n = self.g.n();
        let mut reach = vec![false; n];
        let mut stack = vec![end];
        reach[end] = true;
        while let Some(x) = stack.pop() {
            for &y in self.g.neighbors(x) {
                if !reach[y] && !self.on_path[y] {
                    reach[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..n).any(|x| {
            self.cover[x] == 0 && !reach[x] && !self.g.neighbors(x).iter().any(|&y| reach[y])
        })
    }

    fn extend(&mut self, v: usize) -> Result<bool, OracleError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(OracleError::SizeLimit {
                what: "spine search nodes",
                size: usize::try_from(self.nodes).unwrap_or(usize::MAX),
                limit: usize::try_from(self.limit).unwrap_or(usize::MAX),
            });
        }
        self.path.push(v);
        self.on_path[v] = true;
        self.touch(v, true);
        if self.undominated == 0 {
            return Ok(true);
        }
        if !self.hopeless(v) {
            let g = self.g;
            for &w in g.neighbors(v) {
                if !self.on_path[w] && self.extend(w)? {
                    return Ok(true);
                }
            }
        }
        self.touch(v, false);
        self.on_path[v] = false;
        self.path.pop();
        Ok(false)
    }
}
