mod common;

use dualfvs_core::family::is_antichain;
use dualfvs_core::oracle::oracle_minimal_mfvs_family;
use dualfvs_core::{EdgeColoredGraph, Family, ReducedInstance, VertexSet};
use proptest::prelude::*;

const BUDGET: usize = 6;

/// Expanded family of the reduced instance, `None` when the rules report infeasibility.
fn expanded_family(r: &ReducedInstance) -> Family {
    let undeletable: VertexSet = r.reference().union(r.excluded()).copied().collect();
    let Some(room) = BUDGET.checked_sub(r.forced().len()) else { return Family::new() };
    let picks = oracle_minimal_mfvs_family(r.graph(), room.min(r.graph().vertex_count())).unwrap();
    common::disjoint_from(&picks, &undeletable).iter().flat_map(|p| r.expand(p)).collect()
}

fn direct_family(g: &EdgeColoredGraph, reference: &VertexSet) -> Family {
    common::disjoint_from(&oracle_minimal_mfvs_family(g, BUDGET).unwrap(), reference)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reduction_preserves_the_family(g in common::graph(8, 2, 14, true), mask in any::<u64>()) {
        let reference = common::subset_by_mask(&g, mask & 0b1010_0101);
        let direct = direct_family(&g, &reference);
        let start = ReducedInstance::new(g.clone(), reference.clone()).unwrap();

        let basic = start.apply_basic_rules();
        let full = start.reduce();
        for reduced in [basic, full] {
            match reduced {
                None => prop_assert!(direct.is_empty()),
                Some(r) => {
                    prop_assert_eq!(expanded_family(&r), direct.clone());
                    prop_assert!(r.reference().is_subset(&reference));
                }
            }
        }
    }

    #[test]
    fn reduction_on_multigraphs(g in common::graph(7, 2, 12, false), mask in any::<u64>()) {
        let reference = common::subset_by_mask(&g, mask & 0b0100_0010);
        let direct = direct_family(&g, &reference);
        match ReducedInstance::new(g, reference).unwrap().reduce() {
            None => prop_assert!(direct.is_empty()),
            Some(r) => prop_assert_eq!(expanded_family(&r), direct),
        }
    }

    #[test]
    fn reduction_is_idempotent(g in common::graph(9, 2, 16, true), mask in any::<u64>()) {
        let reference = common::subset_by_mask(&g, mask & 0b1001_0010);
        if let Some(r) = ReducedInstance::new(g, reference).unwrap().reduce() {
            prop_assert_eq!(r.reduce(), Some(r.clone()));
            prop_assert_eq!(r.apply_basic_rules(), Some(r.clone()));
            prop_assert!(r.classify_vertices().low_bound_holds());
            prop_assert!(is_antichain(&expanded_family(&r)));
        }
    }
}
