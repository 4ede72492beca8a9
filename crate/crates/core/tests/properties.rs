use ffgrid_core::bridge::{complete_product_ff, product_lex_ff};
use ffgrid_core::descent::is_descent_free;
use ffgrid_core::first_fit::{first_fit, grundy_number, Coloring};
use ffgrid_core::gds::{hitting_set_gds, is_gds, minimum_gds, HittingMode};
use ffgrid_core::graph::{cartesian_product, Graph, OrderedGraph, VertexOrder};
use ffgrid_core::oracle::chromatic_number;
use ffgrid_core::ordering::lex_ordering;
use ffgrid_core::Caps;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn ordered(max_n: usize) -> impl Strategy<Value = OrderedGraph> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |scan| OrderedGraph::new(g.clone(), VertexOrder::from_scan(scan).unwrap()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn color_counts_are_sandwiched(g in ordered(7)) {
        let caps = Caps::default();
        let ff = first_fit(&g.graph, &g.order).k() as usize;
        let chi = chromatic_number(&g.graph, &caps).unwrap();
        let gamma = grundy_number(&g.graph, &caps).unwrap();
        prop_assert!(chi <= ff);
        prop_assert!(ff <= gamma);
        prop_assert!(gamma <= g.graph.max_degree() + 1);
    }

    #[test]
    fn product_degree_and_size(g in graph(5), h in graph(5)) {
        let p = cartesian_product(&g, &h).unwrap();
        prop_assert_eq!(p.graph.max_degree(), g.max_degree() + h.max_degree());
        prop_assert_eq!(p.graph.edge_count(), g.n() * h.edge_count() + h.n() * g.edge_count());
    }

    #[test]
    fn lex_count_is_symmetric_and_dominates_factors(g in ordered(4), h in ordered(4)) {
        let gh = product_lex_ff(&g, &h).unwrap().k();
        let hg = product_lex_ff(&h, &g).unwrap().k();
        prop_assert_eq!(gh, hg);
        let p = first_fit(&g.graph, &g.order).k();
        let q = first_fit(&h.graph, &h.order).k();
        prop_assert!(gh >= p.max(q));
        prop_assert_eq!(gh, complete_product_ff(p as usize, q as usize).unwrap());
    }

    #[test]
    fn first_fit_needs_no_pins(g in ordered(4), h in ordered(3)) {
        let p = cartesian_product(&g.graph, &h.graph).unwrap();
        let lex = lex_ordering(&g, &h).order;
        let c = first_fit(&p.graph, &lex);
        prop_assert!(is_descent_free(&p.graph, &lex, &c).unwrap());
        prop_assert!(is_gds(&p.graph, &lex, &c, &[]).unwrap());
    }

    #[test]
    fn exact_hitting_set_is_a_minimum_gds(g in ordered(3), h in ordered(3), seed in any::<u64>()) {
        let p = cartesian_product(&g.graph, &h.graph).unwrap();
        let lex = lex_ordering(&g, &h).order;
        // a proper coloring from First-Fit under a scrambled order
        let n = p.n();
        let mut scan: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            scan.swap(i, (s >> 33) as usize % (i + 1));
        }
        let c: Coloring = first_fit(&p.graph, &VertexOrder::from_scan(scan).unwrap());
        let caps = Caps::default();
        let hit = hitting_set_gds(&p.graph, &lex, &c, HittingMode::Exact, &caps).unwrap();
        let min = minimum_gds(&p.graph, &lex, &c, &caps).unwrap();
        prop_assert!(hit.verified && min.verified);
        prop_assert_eq!(hit.size(), min.size());
        let all: Vec<usize> = (0..n).collect();
        prop_assert!(is_gds(&p.graph, &lex, &c, &all).unwrap());
    }
}
