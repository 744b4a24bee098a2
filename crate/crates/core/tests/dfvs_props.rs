mod common;

use dualfvs_core::dfvs::{
    build_cover_graph, enumerate_dfvs_algo_a, enumerate_disjoint_dfvs_with_report, enumerate_minimal_dfvs,
    fvs_2approx, max_matching, min_edge_cover, solve_dfvs, CoverGraph,
};
use dualfvs_core::family::is_antichain;
use dualfvs_core::oracle::{oracle_min_edge_cover, oracle_minimal_mfvs_family, oracle_minimum_mfvs};
use dualfvs_core::{CompactRepresentation, EdgeColoredGraph, Family, VertexSet, BLUE, RED};
use proptest::prelude::*;

fn swap_colors(g: &EdgeColoredGraph) -> EdgeColoredGraph {
    common::relabel(g, |v| v, |c| 3 - c)
}

/// Cover graph with the given bipartite edge list, from disjoint private ids plus one shared id per edge.
fn cover_graph(blue: usize, red: usize, edges: &[(usize, usize)]) -> CoverGraph {
    let mut b: Vec<VertexSet> = (0..blue).map(|i| VertexSet::from([1000 + i as u32])).collect();
    let mut r: Vec<VertexSet> = (0..red).map(|i| VertexSet::from([2000 + i as u32])).collect();
    for (k, &(i, j)) in edges.iter().enumerate() {
        b[i].insert(k as u32 + 1);
        r[j].insert(k as u32 + 1);
    }
    build_cover_graph(&CompactRepresentation::new(b).unwrap(), &CompactRepresentation::new(r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decision_matches_oracle(g in common::graph(10, 2, 18, true), k in 0usize..=4) {
        let oracle = oracle_minimal_mfvs_family(&g, k).unwrap();
        match solve_dfvs(&g, k).unwrap() {
            Some(s) => {
                prop_assert!(s.len() <= k);
                prop_assert!(g.hits_all_monochromatic_cycles(&s));
            }
            None => prop_assert!(oracle.is_empty()),
        }
        prop_assert_eq!(solve_dfvs(&g, k).unwrap().is_some(), !oracle.is_empty());
    }

    #[test]
    fn enumerators_match_oracle(g in common::graph(8, 2, 14, false), k in 0usize..=3) {
        let oracle = oracle_minimal_mfvs_family(&g, k).unwrap();
        let a = enumerate_dfvs_algo_a(&g, k).unwrap();
        let t = enumerate_minimal_dfvs(&g, k).unwrap();
        prop_assert!(is_antichain(&a));
        prop_assert_eq!(&a, &oracle);
        prop_assert_eq!(&t, &oracle);
    }

    #[test]
    fn disjoint_enumeration_matches_oracle(g in common::graph(8, 2, 14, true), k in 0usize..=3) {
        let reference = oracle_minimum_mfvs(&g).unwrap();
        // grow the reference with vertices of odd id, still a solution
        let reference: VertexSet = reference.into_iter().chain(g.vertices().iter().copied().filter(|v| v % 3 == 0)).collect();
        let (family, report) = enumerate_disjoint_dfvs_with_report(&g, &reference, k).unwrap();
        let oracle = common::disjoint_from(&oracle_minimal_mfvs_family(&g, k).unwrap(), &reference);
        prop_assert_eq!(family, oracle);
        prop_assert_eq!(report.reference_size, reference.len());
    }

    #[test]
    fn color_swap_and_relabeling_are_symmetries(g in common::graph(8, 2, 14, true), k in 0usize..=3) {
        let base = enumerate_dfvs_algo_a(&g, k).unwrap();
        prop_assert_eq!(enumerate_dfvs_algo_a(&swap_colors(&g), k).unwrap(), base.clone());
        let shifted = common::relabel(&g, |v| 20 - v, |c| c);
        let expected: Family = base.iter().map(|s| s.iter().map(|&v| 20 - v).collect()).collect();
        prop_assert_eq!(enumerate_minimal_dfvs(&shifted, k).unwrap(), expected);
    }

    #[test]
    fn approximation_within_factor_two(g in common::graph(12, 1, 24, false)) {
        let approx = fvs_2approx(&g, 1).unwrap();
        prop_assert!(g.hits_all_monochromatic_cycles(&approx));
        let opt = oracle_minimum_mfvs(&g).unwrap();
        prop_assert!(approx.len() <= 2 * opt.len(), "approx {:?} opt {:?}", approx, opt);
    }

    #[test]
    fn edge_cover_identity(blue in 0usize..=8, red in 0usize..=8, raw in proptest::collection::vec((0usize..8, 0usize..8), 0..20)) {
        let mut edges: Vec<(usize, usize)> = raw.into_iter().filter(|&(i, j)| i < blue && j < red).collect();
        edges.sort_unstable();
        edges.dedup();
        let h = cover_graph(blue, red, &edges);
        let cover = min_edge_cover(&h);
        prop_assert_eq!(cover.len(), h.non_isolated_count() - max_matching(&h).len());
        prop_assert_eq!(cover.len(), oracle_min_edge_cover(&h).unwrap().len());
        for s in 0..h.set_vertices().len() {
            prop_assert!(h.is_isolated(s) || cover.iter().any(|&e| h.edges()[e].touches(s)));
        }
    }
}

#[test]
fn two_triangles_families_agree() {
    let g = EdgeColoredGraph::new(2, 1..=5, [(1, 2, BLUE), (2, 3, BLUE), (1, 3, BLUE), (3, 4, RED), (4, 5, RED), (3, 5, RED)])
        .unwrap();
    let expected: Family =
        [vec![3], vec![1, 4], vec![1, 5], vec![2, 4], vec![2, 5]].into_iter().map(|s| s.into_iter().collect()).collect();
    assert_eq!(enumerate_dfvs_algo_a(&g, 2).unwrap(), expected);
    assert_eq!(enumerate_minimal_dfvs(&g, 2).unwrap(), expected);
    assert_eq!(oracle_minimal_mfvs_family(&g, 2).unwrap(), expected);
}
