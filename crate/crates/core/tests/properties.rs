use proptest::prelude::*;

use hypersat::constructions::{path_construction, star_construction};
use hypersat::cube::{full_cube, lift_to_qn, CubeAutomorphism, CubeSubgraph, Edge};
use hypersat::io::{parse_edge_list, write_edge_list};
use hypersat::matching::raise_to_degree;
use hypersat::saturation::{contains_tree, greedy_saturate, is_saturated};
use hypersat::tree::{build_caterpillar, build_genstar, build_path, build_star};
use hypersat::Tree;

fn subgraph(dim: u32, bits: &[bool]) -> CubeSubgraph {
    let edges = full_cube(dim).unwrap().edges();
    CubeSubgraph::from_edges(dim, edges.into_iter().zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

fn arb_subgraph(dim: u32) -> impl Strategy<Value = CubeSubgraph> {
    let m = dim as usize * (1 << (dim - 1));
    proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| subgraph(dim, &bits))
}

fn arb_automorphism(dim: u32) -> impl Strategy<Value = CubeAutomorphism> {
    (Just((0..dim).collect::<Vec<u32>>()).prop_shuffle(), 0..1u32 << dim)
        .prop_map(move |(perm, shift)| CubeAutomorphism::new(perm, shift).unwrap())
}

fn arb_small_tree() -> impl Strategy<Value = Tree> {
    prop_oneof![
        (1usize..=5).prop_map(|k| build_path(k).unwrap()),
        (1usize..=4).prop_map(|k| build_star(k).unwrap()),
        (2usize..=3, 1usize..=2).prop_map(|(k, m)| build_genstar(k, m).unwrap()),
        proptest::collection::vec(2usize..=3, 2..=3).prop_map(|d| build_caterpillar(&d).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(g in arb_subgraph(4)) {
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn automorphisms_preserve_structure(g in arb_subgraph(4), a in arb_automorphism(4)) {
        let h = g.apply_automorphism(&a).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        let mut degs_g: Vec<u32> = (0..16).map(|v| g.degree(v)).collect();
        let mut degs_h: Vec<u32> = (0..16).map(|v| h.degree(v)).collect();
        degs_g.sort_unstable();
        degs_h.sort_unstable();
        prop_assert_eq!(degs_g, degs_h);
        prop_assert_eq!(h.apply_automorphism(&a.inverse()).unwrap(), g);
    }

    #[test]
    fn lifting_multiplies_edges(g in arb_subgraph(3), extra in 0u32..=3) {
        let n = 3 + extra;
        let lifted = lift_to_qn(&g, &g, n).unwrap();
        prop_assert_eq!(lifted.edge_count(), g.edge_count() << extra);
    }

    #[test]
    fn greedy_completion_is_saturated(g in arb_subgraph(3), t in arb_small_tree()) {
        prop_assume!(contains_tree(&g, &t).unwrap().is_none());
        let h = greedy_saturate(&g, &t, None).unwrap();
        prop_assert!(g.edges().iter().all(|&e| h.has_edge(e)));
        prop_assert!(is_saturated(&h, &t).unwrap().saturated);
    }

    #[test]
    fn raised_degrees_hit_target(r in 1u32..=4) {
        // the complement of a perfect code in Q_7 starts 1-regular
        let code = hypersat::codes::hamming_code(3).unwrap();
        let q = full_cube(7).unwrap();
        let mut h = CubeSubgraph::empty(7).unwrap();
        let mut cand: Vec<Edge> = Vec::new();
        for e in q.edges() {
            if code.contains(e.lo()) || code.contains(e.hi()) {
                h.add_edge(e).unwrap();
            } else {
                cand.push(e);
            }
        }
        let targets: Vec<u32> = (0..128).filter(|&v| !code.contains(v)).collect();
        let g = raise_to_degree(&h, &cand, &targets, r, &[]).unwrap();
        prop_assert!(targets.iter().all(|&v| g.degree(v) == r));
    }
}

#[test]
fn star_and_path_counts_match_closed_forms() {
    for k in 2..=14 {
        let c = star_construction(k, k).unwrap();
        assert_eq!(c.report.formula_matches, Some(true), "S_{k}");
    }
    for k in 5..=64 {
        let c = path_construction(k, 7.max(c_dim(k))).unwrap();
        assert_eq!(c.report.formula_matches, Some(true), "P_{k}");
    }
}

fn c_dim(k: u32) -> u32 {
    let i = (k - 1).ilog2();
    if (k - (1 << i)) % 2 == 1 { i + 1 } else { i + 2 }
}
