use std::collections::BTreeSet;

use hgraph::clique::{clique_cutset_decomposition, max_clique_cactus};
use hgraph::domination::{min_domset_hgraph, min_domset_star};
use hgraph::oracle::{random_cactus, random_graph, random_height1_poset, random_rep_on, random_subtree_rep, Rng};
use hgraph::order::{interval_dimension_height1, realizer_intersection, Poset};
use hgraph::separators::{is_minimal_separator, minimal_separators, separator_candidates, SeparatorList};
use hgraph::star::recognize_star;
use hgraph::treewidth::{decomposition_from_order, exact_treewidth};
use hgraph::{verify_representation, Graph, HostModel, Representation};
use proptest::prelude::*;

fn pattern(i: usize) -> Graph {
    [Graph::path(2), Graph::star(3), Graph::cycle(3), Graph::diamond(), Graph::complete(4)][i % 5].clone()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn generated_representations_verify(p in 0usize..5, n in 0usize..14, seed in any::<u64>()) {
        let (g, rep) = random_subtree_rep(&pattern(p), n, seed);
        prop_assert!(verify_representation(&g, &rep).unwrap().valid);
        prop_assert_eq!(rep.intersection_graph(), g);
    }

    #[test]
    fn serialization_round_trips(n in 0usize..12, seed in any::<u64>()) {
        let (g, rep) = random_subtree_rep(&Graph::diamond(), n, seed);
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g.clone());
        prop_assert_eq!(Graph::from_dimacs(&g.to_dimacs()).unwrap(), g);
        prop_assert_eq!(Representation::from_json(&rep.to_json()).unwrap(), rep);
        let p = random_height1_poset(1, 8, 0.5, seed);
        prop_assert_eq!(Poset::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn star_graphs_are_recognized(d in 2usize..5, n in 1usize..16, seed in any::<u64>()) {
        let (g, _) = random_subtree_rep(&Graph::star(d), n, seed);
        let r = recognize_star(&g, d).unwrap();
        let rep = r.representation().expect("generated S_d-graph accepted");
        prop_assert!(verify_representation(&g, rep).unwrap().valid);
    }

    #[test]
    fn star_and_general_domination_agree(n in 1usize..12, seed in any::<u64>()) {
        let (g, rep) = random_subtree_rep(&Graph::star(3), n, seed);
        let a = min_domset_star(&g, &rep).unwrap();
        let b = min_domset_hgraph(&g, &rep).unwrap().set;
        prop_assert!(g.is_dominating(&a) && g.is_dominating(&b));
        prop_assert_eq!(a.len(), b.len());
    }

    #[test]
    fn clique_cutset_decomposition_is_valid(n in 0usize..12, density in 0.1f64..0.9, seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let g = random_graph(n, density, &mut rng);
        let d = clique_cutset_decomposition(&g);
        prop_assert!(d.is_valid_for(&g));
        prop_assert!(d.atoms.len() <= n.max(1));
        prop_assert!(d.separators.iter().all(|s| g.is_clique(s)));
    }

    #[test]
    fn cactus_clique_is_a_clique(blocks in 1usize..4, n in 1usize..16, seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let c = random_cactus(blocks, &mut rng);
        let host = HostModel::subdivide(&c, &vec![2; c.m()]);
        let (g, _) = random_rep_on(&host, n, 5, &mut rng);
        let k = max_clique_cactus(&g).unwrap();
        prop_assert!(g.is_clique(&k));
        prop_assert!(!k.is_empty());
    }

    #[test]
    fn decompositions_are_valid_and_bag_cliques_bound_width(n in 0usize..14, density in 0.1f64..0.9, seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let g = random_graph(n, density, &mut rng);
        let (tw, order) = exact_treewidth(&g).unwrap();
        let td = decomposition_from_order(&g, &order);
        prop_assert!(td.is_valid_for(&g));
        prop_assert_eq!(td.width, tw);
        let omega = hgraph::clique::max_clique_exact(&g).len();
        prop_assert!(omega <= tw + 1);
    }

    #[test]
    fn separators_are_minimal_and_candidates_respect_limits(p in 0usize..5, n in 2usize..10, seed in any::<u64>()) {
        let h = pattern(p);
        let (g, rep) = random_subtree_rep(&h, n, seed);
        prop_assume!(g.is_connected());
        let SeparatorList::Separators { separators } = minimal_separators(&g, 100_000).unwrap() else {
            panic!("overflow");
        };
        prop_assert!(separators.iter().all(|s| is_minimal_separator(&g, s)));
        let cands = separator_candidates(&g, &rep, false).unwrap();
        let sets: BTreeSet<Vec<usize>> = cands.iter().map(|c| c.vertices.clone()).collect();
        prop_assert!(separators.iter().all(|s| sets.contains(s)));
        for c in &cands {
            for path in &rep.host.edge_paths {
                let on_path = c.edges.iter().filter(|e| path.windows(2).any(|w| (w[0].min(w[1]), w[0].max(w[1])) == **e)).count();
                prop_assert!(on_path <= 2);
            }
        }
        if p == 0 || p == 1 || p == 2 {
            prop_assert!(separator_candidates(&g, &rep, true).unwrap().iter().all(|c| c.edges.len() <= 2));
        }
    }

    #[test]
    fn realizers_intersect_to_the_poset(seed in any::<u64>()) {
        let p = random_height1_poset(2, 7, 0.5, seed);
        if let Some(r) = interval_dimension_height1(&p, 3).unwrap() {
            prop_assert_eq!(realizer_intersection(&r, p.n()).unwrap(), p);
        }
    }

    #[test]
    fn seeded_generation_is_deterministic(p in 0usize..5, n in 0usize..12, seed in any::<u64>()) {
        let a = random_subtree_rep(&pattern(p), n, seed);
        let b = random_subtree_rep(&pattern(p), n, seed);
        prop_assert_eq!(a.0.to_json(), b.0.to_json());
        prop_assert_eq!(a.1.to_json(), b.1.to_json());
    }
}
