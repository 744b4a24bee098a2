//! Vertex sets and families of vertex sets.
//!
//! A [`Family`] is an ordered set of [`VertexSet`]s; `BTreeSet` ordering makes
//! equality of families plain set-family equality and iteration lexicographic.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{EdgeColoredGraph, VertexId};

pub type VertexSet = BTreeSet<VertexId>;
pub type Family = BTreeSet<VertexSet>;

/// No member of the family contains another.
pub fn is_antichain(family: &Family) -> bool {
    family.iter().all(|a| family.iter().all(|b| a == b || !a.is_subset(b)))
}

/// Every set that picks exactly one element from each group. Groups are
/// expected to be disjoint; overlapping groups yield the smaller unions.
pub fn transversals(groups: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = alloc::vec![VertexSet::new()];
    for group in groups {
        let mut next = Vec::with_capacity(out.len() * group.len());
        for partial in &out {
            for &v in group {
                let mut s = partial.clone();
                s.insert(v);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// `set` hits every monochromatic cycle and no single vertex can be dropped.
/// Hitting all cycles is monotone, so this is inclusion-minimality.
pub fn is_minimal_solution(g: &EdgeColoredGraph, set: &VertexSet) -> bool {
    g.hits_all_monochromatic_cycles(set)
        && set.iter().all(|v| {
            let mut smaller = set.clone();
            smaller.remove(v);
            !g.hits_all_monochromatic_cycles(&smaller)
        })
}

/// Keeps the candidates that are minimal solutions of `g`, have at most
/// `budget` vertices and avoid `forbidden`. Also returns how many candidates
/// were valid solutions within budget but failed minimality.
pub(crate) fn keep_minimal_solutions<I>(
    g: &EdgeColoredGraph,
    candidates: I,
    budget: usize,
    forbidden: &VertexSet,
) -> (Family, usize)
where
    I: IntoIterator<Item = VertexSet>,
{
    let mut out = Family::new();
    let mut rejected = BTreeSet::new();
    let mut non_minimal = 0;
    for set in candidates {
        if set.len() > budget || !set.is_disjoint(forbidden) {
            continue;
        }
        if out.contains(&set) || rejected.contains(&set) {
            continue;
        }
        if is_minimal_solution(g, &set) {
            out.insert(set);
        } else {
            if g.hits_all_monochromatic_cycles(&set) {
                non_minimal += 1;
            }
            rejected.insert(set);
        }
    }
    (out, non_minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BLUE;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn transversal_products() {
        assert_eq!(transversals(&[set(&[3])]), alloc::vec![set(&[3])]);
        let t: Family = transversals(&[set(&[1, 2]), set(&[4, 5])]).into_iter().collect();
        let expected: Family =
            [set(&[1, 4]), set(&[1, 5]), set(&[2, 4]), set(&[2, 5])].into_iter().collect();
        assert_eq!(t, expected);
        assert_eq!(transversals(&[]), alloc::vec![VertexSet::new()]);
    }

    #[test]
    fn antichains() {
        let f: Family = [set(&[1]), set(&[2, 3])].into_iter().collect();
        assert!(is_antichain(&f));
        let f: Family = [set(&[1]), set(&[1, 3])].into_iter().collect();
        assert!(!is_antichain(&f));
    }

    #[test]
    fn minimality_filter() {
        let tri = EdgeColoredGraph::new(2, 1..=3, [(1, 2, BLUE), (2, 3, BLUE), (1, 3, BLUE)]).unwrap();
        let (kept, non_minimal) = keep_minimal_solutions(
            &tri,
            [set(&[1]), set(&[1, 2]), set(&[]), set(&[2]), set(&[3])],
            3,
            &set(&[3]),
        );
        assert_eq!(kept, [set(&[1]), set(&[2])].into_iter().collect());
        assert_eq!(non_minimal, 1);
    }
}
