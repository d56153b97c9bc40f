use proptest::prelude::*;

use aec_core::color::{ColorMap, PartialEdgeColoring};
use aec_core::driver::{color_connected_6_with, color_graph_7, DriverOptions};
use aec_core::gen::{random_4regular, random_graph, random_valid, subcubic_random, SeededRng};
use aec_core::graph::{parse_edge_list, write_edge_list, Graph};
use aec_core::trace::replay;

fn valid_graph() -> impl Strategy<Value = Graph> {
    (5usize..80, 0u64..1000, any::<u64>()).prop_map(|(n, frac, seed)| {
        let m = n - 1 + (frac as usize * n) / 1000;
        random_valid(n, m, seed).unwrap()
    })
}

fn check(c: &PartialEdgeColoring, g: &Graph, k: usize) -> Result<(), TestCaseError> {
    prop_assert!(c.is_total(g));
    prop_assert!(c.verify_acyclic(g).is_ok());
    prop_assert!(c.colors_used(g).len() <= k);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn six_colors_with_debug_asserts(g in valid_graph()) {
        let r = color_connected_6_with(&g, &DriverOptions::debug()).unwrap();
        check(&r.coloring, &g, 6)?;
        prop_assert_eq!(r.stats.direct + r.stats.extensions, g.edge_count());
    }

    #[test]
    fn engine_on_every_edge(g in valid_graph()) {
        let opts = DriverOptions { always_extend: true, trace: true, ..DriverOptions::debug() };
        let r = color_connected_6_with(&g, &opts).unwrap();
        check(&r.coloring, &g, 6)?;
        prop_assert_eq!(replay(&g, &r.trace.join("\n")).unwrap(), r.coloring);
    }

    #[test]
    fn subcubic_graphs(n in 4usize..60, extra in 0usize..20, seed in any::<u64>()) {
        let m = (n - 1 + extra).min(3 * n / 2);
        let g = subcubic_random(n, m, seed).unwrap();
        let c = color_connected_6_with(&g, &DriverOptions::default()).unwrap().coloring;
        check(&c, &g, 6)?;
    }

    #[test]
    fn seven_colors_on_anything(n in 2usize..40, seed in any::<u64>()) {
        let mut rng = SeededRng::new(seed);
        let g = random_graph(n, 2 * n, 4, &mut rng);
        check(&color_graph_7(&g).unwrap(), &g, 7)?;
    }

    #[test]
    fn four_regular(n in 5usize..60, seed in any::<u64>()) {
        let g = random_4regular(n, seed).unwrap();
        prop_assert!(g.is_connected());
        prop_assert!(g.vertices().all(|v| g.degree(v) == 4));
        check(&color_graph_7(&g).unwrap(), &g, 7)?;
    }

    #[test]
    fn renaming_colors_keeps_acyclicity(g in valid_graph(), perm in Just([1u8, 2, 3, 4, 5, 6]).prop_shuffle()) {
        let mut c = color_connected_6_with(&g, &DriverOptions::default()).unwrap().coloring;
        c.permute(&ColorMap::from_images(&perm).unwrap());
        check(&c, &g, 6)?;
    }

    #[test]
    fn text_round_trips(g in valid_graph()) {
        let c = color_connected_6_with(&g, &DriverOptions::default()).unwrap().coloring;
        let g2 = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(write_edge_list(&g2), write_edge_list(&g));
        let c2 = PartialEdgeColoring::parse_text(&g2, &c.to_text(&g)).unwrap();
        prop_assert_eq!(c2, c);
    }
}
