use c4clique::corpus::{co_bipartite_instance, mixed_instance, w5_instance};
use c4clique::{
    clique_from_certificate, find_independent_set_of_size, max_clique_exact, structure_of,
    verify_certificate, Graph,
};

fn check(g: &Graph) {
    let cert = structure_of(g).unwrap().expect("alpha at most two");
    verify_certificate(g, &cert).unwrap();
    let clique = clique_from_certificate(g, &cert).unwrap();
    assert!(g.is_clique(&clique));
    assert!(5 * clique.len() >= 2 * g.n());
    assert!(clique.len() <= max_clique_exact(g, 48).unwrap().len());
}

#[test]
fn structural_families_over_many_seeds() {
    for seed in 0..500 {
        check(&w5_instance(seed, 0, 30).graph);
        check(&co_bipartite_instance(seed, 0, 30).graph);
    }
}

#[test]
fn mixed_corpus_graphs_with_alpha_two() {
    let mut seen = 0;
    for id in 0..500 {
        let inst = mixed_instance(11, id, 24, |_| true).unwrap();
        if find_independent_set_of_size(&inst.graph, 3).is_none() {
            check(&inst.graph);
            seen += 1;
        } else {
            assert_eq!(structure_of(&inst.graph).unwrap(), None);
        }
    }
    assert!(seen > 0);
}
