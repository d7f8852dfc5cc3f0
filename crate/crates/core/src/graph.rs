//! Simple undirected graphs with dense `0..n` vertex ids.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An undirected edge stored in canonical order (`u < v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(into = "[usize; 2]", try_from = "[usize; 2]")
)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the canonical edge joining `a` and `b`.
    ///
    /// Panics if `a == b`; simple graphs have no loops.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = GraphError;

    fn try_from([a, b]: [usize; 2]) -> Result<Self, GraphError> {
        if a == b {
            Err(GraphError::SelfLoop { vertex: a })
        } else {
            Ok(Edge::new(a, b))
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    EdgeNotInHost { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::EdgeNotInHost { u, v } => {
                write!(f, "edge {u}-{v} is not in the host graph")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable once built. The edge list is sorted in canonical order and the
/// neighbor lists are sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut list = Vec::new();
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].u,
                v: w[0].v,
            });
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Like [`Graph::from_edges`] but silently drops repeated edges.
    pub fn from_edges_dedup<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut list = Vec::new();
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_unique(n, list))
    }

    fn from_sorted_unique(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of edge `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    /// The spanning subgraph `(V(self), kept)`.
    pub fn spanning_subgraph(&self, kept: &EdgeSet) -> Graph {
        Graph::from_sorted_unique(self.n, kept.edges.clone())
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the given
    /// order. Returns the graph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = position[w];
                if j != usize::MAX && i < j {
                    edges.push(Edge::new(i, j));
                }
            }
        }
        edges.sort_unstable();
        (
            Graph::from_sorted_unique(vertices.len(), edges),
            vertices.to_vec(),
        )
    }

    /// The graph with one more edge set (or the same graph when already present).
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        edges.push((a, b));
        Graph::from_edges_dedup(self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| (perm[e.u], perm[e.v]));
        Graph::from_edges(self.n, edges).expect("a permutation preserves simplicity")
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || connected_components(self).len() == 1
    }

    /// Vertices in every closed neighborhood bitmask; requires `n <= 64`.
    pub fn closed_neighborhood_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs at most 64 vertices");
        (0..self.n)
            .map(|v| {
                self.adj[v]
                    .iter()
                    .fold(1u64 << v, |acc, &w| acc | (1u64 << w))
            })
            .collect()
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path between `from` and `to` avoiding vertices marked in
    /// `blocked` (endpoints are never blocked). Ties go to smaller ids.
    pub fn shortest_path_avoiding(
        &self,
        from: usize,
        to: usize,
        blocked: &[bool],
    ) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[v] {
                if !seen[w] && (w == to || !blocked[w]) {
                    seen[w] = true;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// A subset of a host graph's edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    edges: Vec<Edge>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet { edges: Vec::new() }
    }

    /// Collects `edges`, checking that each one is an edge of `host`.
    /// Repeats are merged.
    pub fn within<I, E>(host: &Graph, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut list = Vec::new();
        for e in edges {
            let (a, b) = e.into();
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            if !host.has_edge(a, b) {
                return Err(GraphError::EdgeNotInHost { u: a, v: b });
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        list.dedup();
        Ok(EdgeSet { edges: list })
    }

    /// Edges already known to belong to the host.
    pub(crate) fn from_edges_unchecked(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        EdgeSet { edges }
    }

    /// Every edge of `host`.
    pub fn all(host: &Graph) -> Self {
        EdgeSet {
            edges: host.edges.clone(),
        }
    }

    /// Edges of `host` selected by bit `i` of `mask` for edge index `i`.
    pub fn from_mask(host: &Graph, mask: u64) -> Self {
        let edges = host
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        EdgeSet { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.edges
    }
}

impl Default for EdgeSet {
    fn default() -> Self {
        Self::new()
    }
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut block = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
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

/// Component index of every vertex, numbered as in [`connected_components`].
pub fn component_labels(g: &Graph) -> Vec<usize> {
    let mut label = vec![0; g.n()];
    for (i, block) in connected_components(g).iter().enumerate() {
        for &v in block {
            label[v] = i;
        }
    }
    label
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already one set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for root in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Result of subdividing every edge of a graph twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    /// For every edge of `graph` (by index), the original edge it came from.
    pub edge_origin: Vec<Edge>,
    /// For original edge `i = {u, v}` with `u < v`, the vertices `(u_e, v_e)`
    /// where `u_e` is adjacent to `u` and `v_e` to `v`.
    pub inner: Vec<(usize, usize)>,
}

impl Subdivision {
    /// Original vertex or original edge index owning vertex `w` of the subdivision.
    pub fn inner_vertex_edge(&self, w: usize, original_n: usize) -> Option<usize> {
        (w >= original_n).then(|| (w - original_n) / 2)
    }
}

/// Replaces each edge `uv` (`u < v`) by the path `u, u_e, v_e, v`.
///
/// For the `i`-th edge in canonical order, `u_e = n + 2i` and `v_e = n + 2i + 1`.
pub fn subdivide_twice(g: &Graph) -> Subdivision {
    let n = g.n();
    let mut edges = Vec::with_capacity(3 * g.m());
    let mut inner = Vec::with_capacity(g.m());
    for (i, e) in g.edges().iter().enumerate() {
        let ue = n + 2 * i;
        let ve = ue + 1;
        inner.push((ue, ve));
        edges.push((Edge::new(e.u, ue), *e));
        edges.push((Edge::new(ue, ve), *e));
        edges.push((Edge::new(ve, e.v), *e));
    }
    edges.sort_unstable();
    let edge_origin = edges.iter().map(|(_, o)| *o).collect();
    let graph =
        Graph::from_sorted_unique(n + 2 * g.m(), edges.into_iter().map(|(e, _)| e).collect());
    Subdivision {
        graph,
        edge_origin,
        inner,
    }
}

/// Named small graphs.
pub mod families {
    use super::Graph;
    use alloc::vec::Vec;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).unwrap()
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    /// Two triangles sharing edge 1-2: `K4` minus the edge 0-3.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Vertex 0 joined to the path `1..=k`.
    pub fn fan(k: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
        edges.extend((2..=k).map(|v| (v - 1, v)));
        Graph::from_edges(k + 1, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    /// Disjoint union, with `b` shifted past `a`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let shift = a.n();
        let edges = a
            .edges()
            .iter()
            .map(|e| (e.u, e.v))
            .chain(b.edges().iter().map(|e| (e.u + shift, e.v + shift)));
        Graph::from_edges(a.n() + b.n(), edges).unwrap()
    }

    /// Join: disjoint union plus every pair across the two sides.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let shift = a.n();
        let union = disjoint_union(a, b);
        let cross = (0..a.n()).flat_map(|u| (0..b.n()).map(move |v| (u, v + shift)));
        let edges = union.edges().iter().map(|e| (e.u, e.v)).chain(cross);
        Graph::from_edges(a.n() + b.n(), edges).unwrap()
    }
}
