//! Definition-level brute-force checks shared by the integration tests.
#![allow(dead_code)]

use treelike_core::{Edge, Graph};

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn components_of(g: &Graph, vs: &[usize]) -> usize {
    let mut seen = vec![false; g.n()];
    let inside: Vec<bool> = (0..g.n()).map(|v| vs.contains(&v)).collect();
    let mut count = 0;
    for &s in vs {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &w in g.neighbors(x) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

pub fn connected(g: &Graph) -> bool {
    components_of(g, &(0..g.n()).collect::<Vec<_>>()) <= 1
}

pub fn components(g: &Graph) -> usize {
    components_of(g, &(0..g.n()).collect::<Vec<_>>())
}

/// Vertex set inducing a cycle: connected and 2-regular inside.
pub fn induces_cycle(g: &Graph, vs: &[usize]) -> bool {
    vs.len() >= 3
        && components_of(g, vs) == 1
        && vs
            .iter()
            .all(|&v| g.neighbors(v).iter().filter(|w| vs.contains(w)).count() == 2)
}

pub fn has_induced_cycle(g: &Graph, pred: impl Fn(usize) -> bool) -> bool {
    subsets(g.n()).any(|s| pred(s.len()) && induces_cycle(g, &s))
}

/// All cycles as sorted edge lists, by edge-subset enumeration.
pub fn all_cycles(g: &Graph) -> Vec<Vec<Edge>> {
    let m = g.m();
    assert!(m <= 20);
    let mut out = Vec::new();
    for mask in 1u32..1 << m {
        let es: Vec<Edge> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| g.edges()[i])
            .collect();
        if es.len() < 3 {
            continue;
        }
        let mut deg = vec![0; g.n()];
        for e in &es {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let vs: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 2).collect();
        let h = Graph::from_edges(g.n(), es.iter().map(|e| (e.u, e.v))).unwrap();
        if components_of(&h, &vs) == 1 {
            out.push(es);
        }
    }
    out
}

pub fn is_forest(g: &Graph) -> bool {
    g.m() + components(g) == g.n()
}

pub fn forest_of_cacti(g: &Graph) -> bool {
    let cycles = all_cycles(g);
    g.edges()
        .iter()
        .all(|e| cycles.iter().filter(|c| c.contains(e)).count() <= 1)
}

pub fn bipartite(g: &Graph) -> bool {
    subsets(g.n()).any(|left| {
        g.edges()
            .iter()
            .all(|e| left.contains(&e.u) != left.contains(&e.v))
    })
}

pub fn chordal(g: &Graph) -> bool {
    !has_induced_cycle(g, |k| k >= 4)
}

pub fn even_hole_free(g: &Graph) -> bool {
    !has_induced_cycle(g, |k| k >= 4 && k % 2 == 0)
}

pub fn claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|c| {
        let nb = g.neighbors(c);
        subsets(nb.len()).filter(|s| s.len() == 3).all(|s| {
            let (a, b, d) = (nb[s[0]], nb[s[1]], nb[s[2]]);
            g.has_edge(a, b) || g.has_edge(b, d) || g.has_edge(a, d)
        })
    })
}

fn induces_p4(g: &Graph, vs: &[usize]) -> bool {
    let degs: Vec<usize> = vs
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|w| vs.contains(w)).count())
        .collect();
    let edges: usize = degs.iter().sum::<usize>() / 2;
    edges == 3 && components_of(g, vs) == 1 && degs.iter().all(|&d| d <= 2)
}

pub fn quasi_threshold(g: &Graph) -> bool {
    subsets(g.n())
        .filter(|s| s.len() == 4)
        .all(|s| !induces_p4(g, &s) && !induces_cycle(g, &s))
}

pub fn linear_forest(g: &Graph) -> bool {
    is_forest(g) && g.max_degree() <= 2
}

pub fn constellation(g: &Graph) -> bool {
    is_forest(g)
        && g.edges()
            .iter()
            .all(|e| g.degree(e.u) == 1 || g.degree(e.v) == 1)
}

pub fn caterpillar(g: &Graph) -> bool {
    if !(is_forest(g) && connected(g)) {
        return false;
    }
    let inner: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    let (sub, _) = g.induced_subgraph(&inner);
    inner.is_empty() || (connected(&sub) && sub.max_degree() <= 2)
}

/// An ordering where every edge `uw` with `u < v < w` in the order forces
/// `uv` and `vw`.
pub fn proper_interval(g: &Graph) -> bool {
    permutations(g.n()).iter().any(|p| {
        let n = g.n();
        (0..n).all(|i| {
            (i + 1..n).all(|k| {
                !g.has_edge(p[i], p[k])
                    || (i + 1..k).all(|j| g.has_edge(p[i], p[j]) && g.has_edge(p[j], p[k]))
            })
        })
    })
}

pub fn path_power(g: &Graph) -> bool {
    if !connected(g) {
        return false;
    }
    permutations(g.n()).iter().any(|p| {
        [1usize, 2].iter().any(|&k| {
            let n = g.n();
            (0..n).all(|i| (i + 1..n).all(|j| g.has_edge(p[i], p[j]) == (j - i <= k)))
        })
    })
}

pub fn is_ham_path(g: &Graph, p: &[usize]) -> bool {
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    sorted == (0..g.n()).collect::<Vec<_>>() && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn has_ham_path(g: &Graph) -> bool {
    g.n() == 0 || permutations(g.n()).iter().any(|p| is_ham_path(g, p))
}

pub fn domination_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|d| {
            (0..g.n()).all(|v| d.contains(&v) || g.neighbors(v).iter().any(|w| d.contains(w)))
        })
        .map(|d| d.len())
        .min()
        .unwrap()
}

pub fn matching_number(g: &Graph) -> usize {
    let m = g.m();
    assert!(m <= 20);
    (0u32..1 << m)
        .filter(|mask| {
            let mut used = vec![false; g.n()];
            (0..m).filter(|&i| mask >> i & 1 == 1).all(|i| {
                let e = g.edges()[i];
                let ok = !used[e.u] && !used[e.v];
                used[e.u] = true;
                used[e.v] = true;
                ok
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn vertex_cover_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|c| {
            g.edges()
                .iter()
                .all(|e| c.contains(&e.u) || c.contains(&e.v))
        })
        .map(|c| c.len())
        .min()
        .unwrap()
}

/// Largest number of edges in a spanning subgraph passing `pred`.
pub fn max_kept(g: &Graph, pred: impl Fn(&Graph) -> bool) -> Option<usize> {
    let m = g.m();
    assert!(m <= 20);
    (0u32..1 << m)
        .filter_map(|mask| {
            let es = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| (g.edges()[i].u, g.edges()[i].v));
            let h = Graph::from_edges(g.n(), es).unwrap();
            pred(&h).then_some(h.m())
        })
        .max()
}

pub fn is_cactus(g: &Graph) -> bool {
    connected(g) && forest_of_cacti(g)
}
