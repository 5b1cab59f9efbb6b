use proptest::prelude::*;

use qnbc_core::sample::labeled_graph;
use qnbc_core::{checker, solve, Coloring, Graph, VariantMode};

fn graph_and_coloring() -> impl Strategy<Value = (Graph, Coloring)> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (0..1u64 << pairs, 0..1u64 << n)
            .prop_map(move |(e, c)| (labeled_graph(n, e), Coloring::from_mask(n, c)))
    })
}

proptest! {
    #[test]
    fn graph_text_round_trips((g, _) in graph_and_coloring()) {
        prop_assert_eq!(Graph::parse(&g.serialize()).unwrap(), g);
    }

    #[test]
    fn coloring_text_round_trips((_, c) in graph_and_coloring()) {
        prop_assert_eq!(Coloring::parse(&c.serialize()).unwrap(), c);
    }

    #[test]
    fn complement_flips_only_the_dominant((g, c) in graph_and_coloring()) {
        let a = checker::classify(&g, &c).unwrap();
        let b = checker::classify(&g, &c.complement()).unwrap();
        prop_assert_eq!(b, a.complemented());
    }

    #[test]
    fn imbalance_parity_matches_degree((g, c) in graph_and_coloring()) {
        let imb = checker::imbalances(&g, &c).unwrap();
        for v in g.vertices() {
            prop_assert_eq!(imb[v].rem_euclid(2) as usize, g.degree(v) % 2);
        }
    }

    #[test]
    fn counting_identity_on_every_qnbc((g, c) in graph_and_coloring()) {
        if checker::classify(&g, &c).unwrap().is_qnbc() {
            let s = checker::counting_summary(&g, &c).unwrap();
            prop_assert!(s.identity_holds());
        }
    }

    #[test]
    fn solver_witnesses_are_accepted((g, _) in graph_and_coloring()) {
        for mode in VariantMode::ALL {
            let out = solve(&g, mode);
            if let Some(w) = out.witness {
                prop_assert!(mode.accepts(&checker::classify(&g, &w).unwrap()));
            }
        }
    }
}
