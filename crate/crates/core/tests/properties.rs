use c4clique::extraction::degree_square_count;
use c4clique::generators::random_gnp;
use c4clique::harness::graph_from_mask;
use c4clique::{
    clique_substitution, extract_auto, extract_general, extract_large_alpha, extract_triple,
    find_independent_set_of_size, find_induced_c4, greedy_maximal_independent_set,
    max_clique_exact, max_independent_set_exact, naive_find_induced_c4, parse_graph, random_c4free,
    serialize_graph, w5_blowup, wheel5, Graph, Probability, Rational, SubstitutionSpec, VertexSet,
};
use proptest::prelude::*;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            let edges = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
        })
    })
}

fn probability() -> impl Strategy<Value = Probability> {
    (0u64..=10).prop_map(|k| Probability::new(k, 10).unwrap())
}

fn c4_free_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, probability(), any::<u64>()).prop_map(|(n, p, seed)| random_c4free(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn detectors_agree(g in any_graph(12)) {
        let fast = find_induced_c4(&g);
        let slow = naive_find_induced_c4(&g);
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(c) = fast {
            prop_assert!(c.holds_in(&g));
        }
    }

    #[test]
    fn complement_is_an_involution(g in any_graph(14)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn oracle_results_are_valid(g in any_graph(11)) {
        let clique = max_clique_exact(&g, 48).unwrap();
        let indep = max_independent_set_exact(&g, 48).unwrap();
        prop_assert!(g.is_clique(&clique));
        prop_assert!(g.is_independent(&indep));
        prop_assert_eq!(max_clique_exact(&g.complement(), 48).unwrap().len(), indep.len());
        prop_assert_eq!(find_independent_set_of_size(&g, indep.len() + 1), None);
        prop_assert!(find_independent_set_of_size(&g, indep.len()).is_some());
    }

    #[test]
    fn greedy_is_independent_and_maximal(g in any_graph(16)) {
        let s = greedy_maximal_independent_set(&g);
        prop_assert!(g.is_independent(&s));
        for v in 0..g.n() {
            if !s.contains(v) {
                prop_assert!(!g.neighbors(v).is_disjoint(&s), "vertex {} could be added", v);
            }
        }
    }

    #[test]
    fn substitution_stays_c4_free(base in c4_free_graph(8), sizes in proptest::collection::vec(0usize..4, 8)) {
        let sizes = sizes[..base.n()].to_vec();
        let spec = SubstitutionSpec::new(base.clone(), sizes.clone()).unwrap();
        let g = clique_substitution(&spec).unwrap();
        prop_assert_eq!(g.n(), sizes.iter().sum::<usize>());
        prop_assert!(find_induced_c4(&g).is_none());
        let ranges = spec.group_ranges();
        for (a, ra) in ranges.iter().enumerate() {
            for (b, rb) in ranges.iter().enumerate() {
                for u in ra.clone() {
                    for v in rb.clone() {
                        if u != v {
                            prop_assert_eq!(g.has_edge(u, v), a == b || base.has_edge(a, b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn w5_blowup_is_a_substitution(sizes in proptest::array::uniform6(0usize..4)) {
        let spec = SubstitutionSpec::new(wheel5(), sizes.to_vec()).unwrap();
        prop_assert_eq!(w5_blowup(sizes), clique_substitution(&spec).unwrap());
    }

    #[test]
    fn extractors_never_beat_omega(g in c4_free_graph(16)) {
        prop_assume!(g.n() > 0);
        let omega = max_clique_exact(&g, 48).unwrap().len();
        for cert in [extract_general(&g), extract_triple(&g), extract_auto(&g)] {
            let cert = cert.unwrap();
            prop_assert!(cert.holds_in(&g));
            prop_assert!(cert.clique_size >= 1 && cert.clique_size <= omega);
            if cert.precondition_met {
                prop_assert!(cert.bound_satisfied);
            }
        }
    }

    #[test]
    fn universal_vertex_never_shrinks_general_clique(g in c4_free_graph(16)) {
        prop_assume!(g.n() > 0);
        let before = extract_general(&g).unwrap().clique_size;
        let h = g.with_universal_vertex();
        prop_assert!(find_induced_c4(&h).is_none());
        prop_assert!(extract_general(&h).unwrap().clique_size >= before);
    }

    #[test]
    fn degree_square_identity(g in c4_free_graph(20), pick in any::<u64>()) {
        prop_assume!(g.n() > 0);
        let greedy = greedy_maximal_independent_set(&g);
        // A pseudo-random subset of the greedy set is still independent.
        let subset = VertexSet::from_vertices(g.n(), greedy.iter().filter(|&v| pick >> (v % 64) & 1 == 1));
        for s in [greedy, subset] {
            let count = degree_square_count(&g, &s);
            prop_assert!(count.identity_holds());
            prop_assert!(count.cauchy_schwarz_holds());
            let cert = extract_large_alpha(&g, &s, Rational::new(1, 2)).unwrap();
            prop_assert!(cert.holds_in(&g));
        }
    }

    #[test]
    fn mask_graphs_enumerate_edge_subsets(n in 0usize..=6, mask in any::<u64>()) {
        let pairs = n * n.saturating_sub(1) / 2;
        let mask = if pairs == 0 { 0 } else { mask & ((1u64 << pairs) - 1) };
        let g = graph_from_mask(n, mask);
        prop_assert_eq!(g.edge_count() as u32, mask.count_ones());
    }

    #[test]
    fn parse_serialize_round_trip(g in any_graph(20)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(serialize_graph(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn repaired_random_graphs_are_c4_free(n in 0usize..30, p in probability(), seed in any::<u64>()) {
        let g = random_c4free(n, p, seed);
        prop_assert!(find_induced_c4(&g).is_none());
        let raw = random_gnp(n, p, seed);
        for (u, v) in g.edges() {
            prop_assert!(raw.has_edge(u, v), "repair only deletes edges");
        }
    }
}
