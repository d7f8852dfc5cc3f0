mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treelike_core::generate::{connected_gnp, gnp, labeled_catalog, random_bipartite};
use treelike_core::oracle::{
    check_p3_partition, hamiltonian_path, is_dominating, is_matching, max_matching,
    max_spanning_cactus_by_cycles, max_spanning_cactus_by_edges, max_spanning_in_class,
    min_dominating_set, partition_into_p3, Limits, P3Mode,
};
use treelike_core::recognize::ClassLabel;
use treelike_core::Graph;

fn has_p3_partition(g: &Graph, left: &[usize]) -> bool {
    let Some(&a) = left.first() else {
        return true;
    };
    let rest: Vec<usize> = left[1..].to_vec();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let (b, c) = (rest[i], rest[j]);
            let edges = [g.has_edge(a, b), g.has_edge(b, c), g.has_edge(a, c)]
                .iter()
                .filter(|&&x| x)
                .count();
            if edges >= 2 {
                let next: Vec<usize> = rest.iter().copied().filter(|&v| v != b && v != c).collect();
                if has_p3_partition(g, &next) {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn small_oracles_match_brute_force() {
    let l = Limits::default();
    for n in 0..=5 {
        for g in labeled_catalog(n) {
            let path = hamiltonian_path(&g, &l).unwrap();
            assert_eq!(path.is_some(), common::has_ham_path(&g), "{g:?}");
            if let Some(p) = path {
                assert!(common::is_ham_path(&g, &p));
            }
            let d = min_dominating_set(&g, &l).unwrap();
            assert!(is_dominating(&g, &d));
            assert_eq!(d.len(), common::domination_number(&g));
            let m = max_matching(&g);
            assert!(is_matching(&g, &m));
            assert_eq!(m.len(), common::matching_number(&g));
            let p3 = partition_into_p3(&g, P3Mode::Spanning, &l).unwrap();
            assert_eq!(
                p3.is_some(),
                n % 3 == 0 && has_p3_partition(&g, &(0..n).collect::<Vec<_>>())
            );
            if let Some(blocks) = p3 {
                assert!(check_p3_partition(&g, &blocks, P3Mode::Spanning));
            }
        }
    }
}

#[test]
fn spanning_oracle_matches_brute_force() {
    let l = Limits::default();
    type Check = fn(&Graph) -> bool;
    let labels: [(ClassLabel, Check); 5] = [
        (ClassLabel::Cactus, common::is_cactus),
        (ClassLabel::ForestOfCacti, common::forest_of_cacti),
        (ClassLabel::Caterpillar, common::caterpillar),
        (ClassLabel::Constellation, common::constellation),
        (ClassLabel::LinearForest, common::linear_forest),
    ];
    for n in 1..=5 {
        for g in labeled_catalog(n) {
            for (label, pred) in labels {
                let brute = common::max_kept(&g, pred);
                match max_spanning_in_class(&g, label, &l) {
                    Ok(sol) => {
                        assert_eq!(Some(sol.kept().len()), brute, "{label} on {g:?}");
                        assert!(sol.verify());
                    }
                    Err(_) => assert_eq!(brute, None, "{label} on {g:?}"),
                }
            }
        }
    }
}

#[test]
fn cactus_engines_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let l = Limits::generous();
    for i in 0..400 {
        let n = 1 + i % 9;
        let g = connected_gnp(n, 0.5, &mut rng);
        let a = max_spanning_cactus_by_edges(&g, true, &l).unwrap();
        let b = max_spanning_cactus_by_cycles(&g, true, &l).unwrap();
        assert_eq!(a.kept().len(), b.kept().len(), "{g:?}");
        assert!(a.verify() && b.verify());
        let g = gnp(n, 0.4, &mut rng);
        let a = max_spanning_cactus_by_edges(&g, false, &l).unwrap();
        let b = max_spanning_cactus_by_cycles(&g, false, &l).unwrap();
        assert_eq!(a.kept().len(), b.kept().len(), "{g:?}");
    }
}

#[test]
fn konig_on_bipartite_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let g = random_bipartite(8, 0.4, &mut rng);
        assert_eq!(
            max_matching(&g).len(),
            common::vertex_cover_number(&g),
            "{g:?}"
        );
    }
}

#[test]
fn blossom_matches_brute_force_on_dense_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let g = gnp(8, 0.45, &mut rng);
        if g.m() > 20 {
            continue;
        }
        let m = max_matching(&g);
        assert!(is_matching(&g, &m));
        assert_eq!(m.len(), common::matching_number(&g), "{g:?}");
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p)
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn domination_never_grows_when_an_edge_is_added(g in arb_graph(10), a in 0usize..10, b in 0usize..10) {
        let l = Limits::default();
        let (a, b) = (a % g.n(), b % g.n());
        prop_assume!(a != b && !g.has_edge(a, b));
        let h = g.with_edge(a, b).unwrap();
        let before = min_dominating_set(&g, &l).unwrap().len();
        let after = min_dominating_set(&h, &l).unwrap().len();
        prop_assert!(after <= before);
    }

    #[test]
    fn traceable_iff_spanning_linear_forest_has_n_minus_1_edges(g in arb_graph(9)) {
        let l = Limits::default();
        prop_assume!(g.m() <= 24);
        let path = hamiltonian_path(&g, &l).unwrap();
        let lf = max_spanning_in_class(&g, ClassLabel::LinearForest, &l).unwrap();
        prop_assert_eq!(path.is_some(), lf.kept().len() + 1 == g.n());
    }
}
