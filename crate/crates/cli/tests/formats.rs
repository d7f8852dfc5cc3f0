use proptest::prelude::*;
use treelike::format::{parse_graph, serialize_graph, Format};
use treelike_core::Graph;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..=32).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p);
            Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]
    #[test]
    fn round_trips(g in arb_graph()) {
        for f in [Format::EdgeList, Format::Graph6, Format::Labeled] {
            let text = serialize_graph(&g, f);
            prop_assert_eq!(&parse_graph(text.as_bytes(), f).unwrap(), &g, "{:?}", f);
        }
        let auto = serialize_graph(&g, Format::Graph6);
        prop_assert_eq!(parse_graph(auto.as_bytes(), Format::Auto).unwrap(), g.clone());
        let auto = serialize_graph(&g, Format::EdgeList);
        prop_assert_eq!(parse_graph(auto.as_bytes(), Format::Auto).unwrap(), g);
    }
}

/// Decodes graph6 from the bit layout directly: column-wise upper triangle,
/// six bits per byte, most significant bit first.
fn reference_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = vec![n as u8 + 63];
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc * 2 + b as u8);
        out.push(v + 63);
    }
    out
}

proptest! {
    #[test]
    fn graph6_matches_reference(g in arb_graph()) {
        prop_assert_eq!(serialize_graph(&g, Format::Graph6).into_bytes(), reference_graph6(&g));
    }
}
