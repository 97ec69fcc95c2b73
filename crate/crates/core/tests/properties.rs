use chordalpoly::decomposition::{decompose, verify_combination};
use chordalpoly::graph::{gen_random_chordal, maximal_cliques, mcs_order};
use chordalpoly::lp::max_weight_subgraph;
use chordalpoly::rational::{self, frac, int, Rational};
use chordalpoly::subgraph::{enumerate_induced, incidence_vector};
use chordalpoly::{parse_graph, ExtendedVector, Graph, SubgraphKind};
use num_traits::Zero;
use proptest::prelude::*;

fn chordal_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.1f64..0.95, any::<u64>()).prop_map(|(n, d, seed)| gen_random_chordal(n, d, seed))
}

fn kind() -> impl Strategy<Value = SubgraphKind> {
    prop_oneof![Just(SubgraphKind::Tree), Just(SubgraphKind::Path)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(p in any::<i64>(), q in any::<i64>().prop_filter("nonzero", |q| *q != 0)) {
        let r = frac(p, q);
        prop_assert_eq!(rational::parse(&rational::format(&r)), Some(r));
    }

    #[test]
    fn dimacs_round_trip(g in chordal_graph(12)) {
        let h = parse_graph(&g.to_dimacs()).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn generated_graphs_are_chordal(g in chordal_graph(14)) {
        let (peo, chordal) = mcs_order(&g);
        prop_assert!(chordal);
        prop_assert!(maximal_cliques(&g, &peo).unwrap().len() <= g.n());
    }

    #[test]
    fn sums_of_supports_decompose(
        g in chordal_graph(8),
        k in kind(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6),
    ) {
        let supports = enumerate_induced(k, &g);
        let mut p = ExtendedVector::zeros(&g);
        for i in &picks {
            p.add_scaled(&incidence_vector(&g, &supports[i.index(supports.len())]), &int(1));
        }
        let c = decompose(k, &g, &p).unwrap();
        prop_assert!(verify_combination(&g, k, &c, &p));
        prop_assert_eq!(c.total(), picks.len() as u64);
    }

    #[test]
    fn lp_matches_enumeration(
        g in chordal_graph(7),
        k in kind(),
        raw in prop::collection::vec(-5i64..=5, 64),
    ) {
        let w = ExtendedVector {
            x: (0..g.n()).map(|i| int(raw[i])).collect(),
            y: (0..g.m()).map(|e| int(raw[(g.n() + e) % raw.len()])).collect(),
        };
        let best = enumerate_induced(k, &g)
            .iter()
            .map(|s| incidence_vector(&g, s).dot(&w))
            .max()
            .unwrap_or_else(Rational::zero);
        let got = max_weight_subgraph(k, &g, &w).unwrap();
        prop_assert_eq!(got.value, best);
    }
}
