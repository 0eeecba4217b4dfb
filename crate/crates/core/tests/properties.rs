use betti_cone_core::betti::{
    check_support_cn, check_support_cnh, hk_vector, hochster_diagram, regularity, suspend_diagram, SubgraphHomologyTable,
};
use betti_cone_core::cone::{index_set, is_initial, witnesses_cnh, Hochster};
use betti_cone_core::graph::{empty, pair_count, single_edge};
use betti_cone_core::{FieldSpec, Graph};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (0..1u64 << pair_count(n)).prop_map(move |mask| Graph::from_edge_mask(n, mask).unwrap())
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (perm[u - 1] + 1, perm[v - 1] + 1)).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn diagrams_ignore_labels(g in arb_graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for k in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        prop_assert_eq!(hochster_diagram(&relabel(&g, &perm), Q).unwrap(), hochster_diagram(&g, Q).unwrap());
    }

    #[test]
    fn isolated_vertices_do_not_matter(g in arb_graph(7), extra in 0usize..4) {
        let b = hochster_diagram(&g, Q).unwrap();
        let padded = g.disjoint_union(&empty(extra).unwrap()).unwrap();
        prop_assert_eq!(hochster_diagram(&padded, Q).unwrap(), b.clone());
        prop_assert_eq!(hochster_diagram(&g.strip_isolated(), Q).unwrap(), b);
    }

    #[test]
    fn random_graphs_lie_in_the_height_cone(g in arb_graph(9)) {
        let b = hochster_diagram(&g, Q).unwrap();
        let h = g.height();
        prop_assert!(check_support_cn(&b, g.n()));
        prop_assert!(check_support_cnh(&b, g.n(), h));
        prop_assert!(hk_vector(&b, h as u32).unwrap().vanishes_below(h));
        if g.edge_count() > 0 {
            prop_assert!(regularity(&b).unwrap() <= g.min_maximal_matching_size() + 1);
        }
    }

    #[test]
    fn suspension_rule_on_larger_graphs(g in arb_graph(8)) {
        let l = single_edge().unwrap();
        let direct = hochster_diagram(&g.disjoint_union(&l).unwrap(), Q).unwrap();
        prop_assert_eq!(direct, suspend_diagram(&hochster_diagram(&g, Q).unwrap()));
    }

    #[test]
    fn table_lookup_matches_direct_sweep(g in arb_graph(9)) {
        let table = SubgraphHomologyTable::new(5, Q).unwrap();
        prop_assert_eq!(table.diagram(&g).unwrap(), hochster_diagram(&g, Q).unwrap());
    }

    #[test]
    fn prime_fields_agree_on_small_graphs(g in arb_graph(8), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        // independence complexes on <= 8 vertices have no torsion in this range
        prop_assert_eq!(hochster_diagram(&g, FieldSpec::prime(p).unwrap()).unwrap(), hochster_diagram(&g, Q).unwrap());
    }
}

#[test]
fn witnesses_beyond_the_acceptance_range() {
    for (n, h) in [(13, 1), (13, 6), (14, 7), (14, 13)] {
        let r = witnesses_cnh(n, h, &mut Hochster(Q)).unwrap();
        assert_eq!(r.dimension, h * (n - h - 1) + 1);
        let set = index_set(n, Some(h)).unwrap();
        for w in &r.witnesses {
            assert!(is_initial(&w.diagram, w.position, &set).unwrap());
        }
    }
}
