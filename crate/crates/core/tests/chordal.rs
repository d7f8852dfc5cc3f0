use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treelike_core::chordal_cactus::*;
use treelike_core::generate::{chordal_random, gnp, random_spanning_cactus};
use treelike_core::oracle::{max_spanning_cactus_by_edges, Limits};
use treelike_core::pipeline::CactusOptions;
use treelike_core::recognize::{ClassLabel, Witness};
use treelike_core::{Graph, SpanningSolution};

/// Searches for `(E_1, x_1, ..., E_k, x_k)` with distinct hyperedges and
/// distinct vertices, `x_i` in `E_i` and `E_{i+1}`, straight from the
/// definition.
fn has_berge_cycle(sets: &[[usize; 3]]) -> bool {
    fn extend(
        sets: &[[usize; 3]],
        first: usize,
        last: usize,
        used_e: &mut Vec<usize>,
        used_x: &mut Vec<usize>,
    ) -> bool {
        for &x in &sets[last] {
            if used_x.contains(&x) {
                continue;
            }
            if used_e.len() >= 2 && sets[first].contains(&x) {
                return true;
            }
            used_x.push(x);
            for next in 0..sets.len() {
                if !used_e.contains(&next) && sets[next].contains(&x) {
                    used_e.push(next);
                    if extend(sets, first, next, used_e, used_x) {
                        return true;
                    }
                    used_e.pop();
                }
            }
            used_x.pop();
        }
        false
    }
    (0..sets.len()).any(|s| extend(sets, s, s, &mut vec![s], &mut Vec::new()))
}

/// A random inclusion-maximal Berge-acyclic selection.
fn random_acyclic(g: &Graph, rng: &mut ChaCha8Rng) -> BergeSelection {
    let h = triangle_hypergraph(g);
    let mut order: Vec<usize> = (0..h.hyperedges.len()).collect();
    order.shuffle(rng);
    let mut sel = BergeSelection {
        hypergraph: h,
        chosen: Vec::new(),
    };
    for i in order {
        sel.chosen.push(i);
        if is_berge_acyclic(&sel).is_err() {
            sel.chosen.pop();
        }
    }
    sel
}

#[test]
fn berge_check_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..600 {
        let g = gnp(7, 0.6, &mut rng);
        let h = triangle_hypergraph(&g);
        let chosen: Vec<usize> = (0..h.hyperedges.len())
            .filter(|_| rng.gen_bool(0.3))
            .take(7)
            .collect();
        let sets: Vec<[usize; 3]> = chosen.iter().map(|&i| h.hyperedges[i]).collect();
        let sel = BergeSelection {
            hypergraph: h,
            chosen,
        };
        let verdict = is_berge_acyclic(&sel);
        assert_eq!(verdict.is_err(), has_berge_cycle(&sets), "{sets:?}");
        if let Err(c) = verdict {
            let k = c.hyperedges.len();
            assert!(k >= 2 && c.vertices.len() == k);
            for i in 0..k {
                let here = sel.hypergraph.hyperedges[c.hyperedges[i]];
                let next = sel.hypergraph.hyperedges[c.hyperedges[(i + 1) % k]];
                assert!(here.contains(&c.vertices[i]) && next.contains(&c.vertices[i]));
            }
        }
    }
}

#[test]
fn acyclic_selections_realize_to_triangle_cacti() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..400 {
        let n = rng.gen_range(1..=10);
        let g = chordal_random(n, &mut rng);
        let sel = random_acyclic(&g, &mut rng);
        let r = realize(&g, &sel, &non_triangle_edges(&g)).unwrap();
        let sol = SpanningSolution::new(
            g.clone(),
            treelike_core::EdgeSet::all(&r),
            ClassLabel::ForestOfCacti,
        )
        .unwrap();
        let Some(Witness::Cycles { cycles, .. }) = sol.certificate().witness() else {
            panic!()
        };
        assert_eq!(cycles.len(), sel.chosen.len());
        assert!(cycles.iter().all(|c| c.len() == 3));
    }
}

#[test]
fn pipeline_is_optimal_and_counts_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let l = Limits::generous();
    for _ in 0..250 {
        let n = rng.gen_range(1..=9);
        let g = chordal_random(n, &mut rng);
        let p = max_spanning_cactus_chordal(&g, &CactusOptions::default(), &l).unwrap();
        let o = max_spanning_cactus_by_edges(&g, true, &l).unwrap();
        assert_eq!(p.solution.kept().len(), o.kept().len(), "{g:?}");
        assert_eq!(
            p.solution.kept().len(),
            g.n() - 1 + p.selection.chosen.len()
        );
        assert!(p.solution.verify());
    }
}

#[test]
fn smaller_selections_give_fewer_triangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let l = Limits::generous();
    for _ in 0..150 {
        let g = chordal_random(rng.gen_range(3..=9), &mut rng);
        let best = max_spanning_cactus_chordal(&g, &CactusOptions::default(), &l).unwrap();
        let k = best.selection.chosen.len();
        if k == 0 {
            continue;
        }
        let mut smaller = best.selection.clone();
        smaller.chosen.remove(rng.gen_range(0..k));
        let r = realize(&g, &smaller, &non_triangle_edges(&g)).unwrap();
        let joined = join_components(&g, &r).unwrap();
        let Some(Witness::Cycles { cycles, .. }) = joined.certificate().witness() else {
            panic!()
        };
        assert!(cycles.len() < k);
        assert!(joined.kept().len() < best.solution.kept().len());
    }
}

#[test]
fn join_order_does_not_change_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let l = Limits::generous();
    for _ in 0..200 {
        let g = chordal_random(rng.gen_range(2..=9), &mut rng);
        let best = max_spanning_cactus_chordal(&g, &CactusOptions::default(), &l).unwrap();
        let r = realize(&g, &best.selection, &non_triangle_edges(&g)).unwrap();
        let mut order = g.edges().to_vec();
        order.shuffle(&mut rng);
        let s = join_components_by(&g, &r, &order).unwrap();
        assert_eq!(s.kept().len(), best.solution.kept().len());
        assert_eq!(s.label(), ClassLabel::Cactus);
    }
}

fn excess(sol: &SpanningSolution) -> usize {
    match sol.certificate().witness() {
        Some(Witness::Cycles { cycles, .. }) => cycles.iter().map(|c| c.len() - 3).sum(),
        _ => panic!(),
    }
}

#[test]
fn chord_swaps_shrink_cycles_until_triangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut swaps = 0;
    for _ in 0..200 {
        let g = chordal_random(rng.gen_range(1..=9), &mut rng);
        let kept = random_spanning_cactus(&g, &mut rng);
        let mut cur = SpanningSolution::new(g.clone(), kept, ClassLabel::Cactus).unwrap();
        let edges = cur.kept().len();
        while let Some(next) = chord_swap(&g, &cur).unwrap() {
            assert!(excess(&next) < excess(&cur));
            assert_eq!(next.kept().len(), edges);
            cur = next;
            swaps += 1;
        }
        assert_eq!(excess(&cur), 0);
        let t = triangularize(
            &g,
            &SpanningSolution::new(g.clone(), cur.kept().clone(), ClassLabel::Cactus).unwrap(),
        )
        .unwrap();
        assert_eq!(t, cur);
    }
    assert!(swaps > 50, "only {swaps} swaps");
}
