//! Instance generators. Each family is in its class by construction.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, Graph};

fn shuffled_labels<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// Erdős–Rényi graph: each pair is an edge independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// `gnp` conditioned on connectivity, by rejection.
pub fn connected_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random bipartite graph with sides chosen by coin flips.
pub fn random_bipartite<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// Connected chordal graph: each new vertex is attached to a random clique
/// around a random earlier vertex, so the insertion order reversed is a
/// perfect elimination ordering. Labels are shuffled at the end.
pub fn chordal_random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut pool: Vec<usize> = adj[u].iter().copied().collect();
        pool.shuffle(rng);
        for w in pool {
            if rng.gen_bool(0.5) && clique.iter().all(|c| adj[w].contains(c)) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[v].insert(c);
            adj[c].insert(v);
        }
    }
    let edges = (0..n).flat_map(|u| adj[u].iter().filter(move |&&w| u < w).map(move |&w| (u, w)));
    let g = Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("simple by construction");
    shuffled_labels(&g, rng)
}

/// Graph whose edges join every vertex to each of its ancestors in a rooted
/// forest given by `parent`.
pub fn ancestor_graph(parent: &[Option<usize>]) -> Graph {
    let mut edges = Vec::new();
    for v in 0..parent.len() {
        let mut a = parent[v];
        while let Some(p) = a {
            edges.push(Edge::new(p, v));
            a = parent[p];
        }
    }
    Graph::from_edges(parent.len(), edges).expect("ancestors are distinct")
}

/// Connected quasi-threshold graph from a random recursive tree rooted at
/// the first vertex. Labels are shuffled at the end.
pub fn qt_random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let parent: Vec<Option<usize>> = (0..n)
        .map(|v| {
            if v == 0 {
                None
            } else {
                Some(rng.gen_range(0..v))
            }
        })
        .collect();
    shuffled_labels(&ancestor_graph(&parent), rng)
}

/// Graphs of all `(n-1)!` recursive trees on `n` vertices, deduplicated.
/// Every connected quasi-threshold isomorphism class appears, since any
/// rooted tree can be numbered so that parents precede children.
pub fn qt_exhaustive(n: usize) -> Vec<Graph> {
    let mut out = BTreeSet::new();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    fn rec(v: usize, parent: &mut Vec<Option<usize>>, out: &mut BTreeSet<Vec<Edge>>) {
        if v == parent.len() {
            out.insert(ancestor_graph(parent).edges().to_vec());
            return;
        }
        for p in 0..v {
            parent[v] = Some(p);
            rec(v + 1, parent, out);
        }
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    rec(1, &mut parent, &mut out);
    out.into_iter()
        .map(|e| Graph::from_edges(n, e).expect("simple"))
        .collect()
}

/// Bipartite graph with maximum degree at most three on `n` vertices,
/// `n` divisible by three. Cross pairs are visited in random order and kept
/// with probability `p` while both ends have spare degree.
pub fn bipartite_subcubic<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Option<Graph> {
    if !n.is_multiple_of(3) {
        return None;
    }
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| side[u] != side[v])
        .collect();
    pairs.shuffle(rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < 3 && deg[v] < 3 && rng.gen_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Some(Graph::from_edges(n, edges).expect("pairs are distinct"))
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices, in order of the
/// edge-mask over pairs listed lexicographically.
pub fn labeled_catalog(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "catalog too large");
    (0u64..1 << pairs.len()).map(move |mask| {
        let e = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(n, e.collect::<Vec<_>>()).expect("pairs are distinct")
    })
}

/// Lexicographically smallest adjacency bit string over all relabelings that
/// list vertices by non-increasing degree.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
    let mut best: Option<Vec<bool>> = None;
    let mut perm = order.clone();
    permute_classes(g, &mut perm, 0, &mut best);
    best.unwrap_or_default()
}

fn permute_classes(g: &Graph, perm: &mut [usize], start: usize, best: &mut Option<Vec<bool>>) {
    let n = perm.len();
    if start == n {
        let bits: Vec<bool> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| g.has_edge(perm[i], perm[j]))
            .collect();
        if best.as_ref().is_none_or(|b| bits < *b) {
            *best = Some(bits);
        }
        return;
    }
    let d = g.degree(perm[start]);
    let end = (start..n).find(|&i| g.degree(perm[i]) != d).unwrap_or(n);
    permute_block(g, perm, start, end, best);
}

fn permute_block(
    g: &Graph,
    perm: &mut [usize],
    i: usize,
    end: usize,
    best: &mut Option<Vec<bool>>,
) {
    if i == end {
        permute_classes(g, perm, end, best);
        return;
    }
    for j in i..end {
        perm.swap(i, j);
        permute_block(g, perm, i + 1, end, best);
        perm.swap(i, j);
    }
}

/// One representative of each isomorphism class on `n` vertices, grown by
/// adding a vertex with every possible neighborhood to the classes on
/// `n - 1` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (k - 1) {
                let mut edges: Vec<Edge> = g.edges().to_vec();
                edges.extend(
                    (0..k - 1)
                        .filter(|&u| mask >> u & 1 == 1)
                        .map(|u| Edge::new(u, k - 1)),
                );
                let h = Graph::from_edges(k, edges).expect("new vertex is fresh");
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// A random maximal spanning forest of cacti of `g`: a randomized
/// depth-first spanning forest, then the remaining edges in random order,
/// each kept when the result is still a forest of cacti. Depth-first trees
/// have long paths, so long cycles are common.
pub fn random_spanning_cactus<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> crate::graph::EdgeSet {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut kept: Vec<Edge> = Vec::new();
    let mut roots: Vec<usize> = (0..n).collect();
    roots.shuffle(rng);
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut stack = vec![r];
        while let Some(&v) = stack.last() {
            let next: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !seen[w])
                .collect();
            if next.is_empty() {
                stack.pop();
                continue;
            }
            let w = *next.choose(rng).unwrap();
            seen[w] = true;
            kept.push(Edge::new(v, w));
            stack.push(w);
        }
    }
    let mut rest: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !kept.contains(e))
        .collect();
    rest.shuffle(rng);
    for e in rest {
        kept.push(e);
        let h = Graph::from_edges(n, kept.iter().map(|&e| (e.u, e.v))).expect("host edges");
        if !crate::recognize::is_forest_of_cacti(&h).is_accepted() {
            kept.pop();
        }
    }
    crate::graph::EdgeSet::within(g, kept.iter().map(|&e| (e.u, e.v))).expect("host edges")
}
