//! Dual feedback vertex set: decision via compact representations and a
//! minimum edge cover, and two enumerators of all minimal solutions.

mod approx;
mod compression;
mod cover;

use alloc::vec::Vec;

pub use approx::fvs_2approx;
pub use compression::{
    enumerate_disjoint_dfvs, enumerate_disjoint_dfvs_with_report, BranchRecord, CompressionReport,
    HIGH_VERTEX_FACTOR, PATH_FACTOR,
};
pub use cover::{
    build_cover_graph, enumerate_minimal_covers, max_matching, min_edge_cover, min_hitting_from_reps,
    CoverEdge, CoverElement, CoverGraph, SetVertex, Side,
};

use crate::compact::{enumerate_fvs_compact_reps, CompactRepresentation};
use crate::family::{keep_minimal_solutions, transversals, Family, VertexSet};
use crate::graph::{EdgeColoredGraph, BLUE, RED};
use crate::subsets::for_each_combination;
use crate::{Error, Result};

pub(crate) fn require_bicolored(g: &EdgeColoredGraph) -> Result<()> {
    if g.colors() == 2 {
        Ok(())
    } else {
        Err(Error::WrongColorCount { expected: 2, found: g.colors() })
    }
}

fn rep_pairs(g: &EdgeColoredGraph, budget: usize) -> Result<(Vec<CompactRepresentation>, Vec<CompactRepresentation>)> {
    Ok((enumerate_fvs_compact_reps(g, BLUE, budget)?, enumerate_fvs_compact_reps(g, RED, budget)?))
}

/// A dual feedback vertex set with at most `budget` vertices, if one exists.
///
/// Every minimal solution is the union of a minimal blue and a minimal red
/// feedback vertex set, so trying the minimum hitting set of every pair of
/// compact representations decides the instance.
pub fn solve_dfvs(g: &EdgeColoredGraph, budget: usize) -> Result<Option<VertexSet>> {
    require_bicolored(g)?;
    let (blue, red) = rep_pairs(g, budget)?;
    for cb in &blue {
        for cr in &red {
            let s = min_hitting_from_reps(cb, cr);
            if s.len() <= budget {
                debug_assert!(g.hits_all_monochromatic_cycles(&s));
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// All minimal dual feedback vertex sets with at most `budget` vertices, via
/// minimal covers of the cover graph of every representation pair.
pub fn enumerate_dfvs_algo_a(g: &EdgeColoredGraph, budget: usize) -> Result<Family> {
    require_bicolored(g)?;
    let (blue, red) = rep_pairs(g, budget)?;
    let mut candidates = Vec::new();
    for cb in &blue {
        for cr in &red {
            let h = build_cover_graph(cb, cr);
            for cover in enumerate_minimal_covers(&h, budget) {
                let groups: Vec<VertexSet> = cover.iter().map(|&el| h.element_members(el)).collect();
                candidates.extend(transversals(&groups));
            }
        }
    }
    let (family, non_minimal) = keep_minimal_solutions(g, candidates, budget, &VertexSet::new());
    if non_minimal > 0 {
        log::debug!("cover enumeration filtered {non_minimal} non-minimal transversals");
    }
    Ok(family)
}

/// All minimal dual feedback vertex sets with at most `budget` vertices, by
/// compression against a 2-approximate solution `X`: for every `Y ⊆ X` the
/// solutions of `g - Y` disjoint from `X - Y` are enumerated and joined with `Y`.
pub fn enumerate_minimal_dfvs(g: &EdgeColoredGraph, budget: usize) -> Result<Family> {
    require_bicolored(g)?;
    let mut scaffold = fvs_2approx(g, BLUE)?;
    scaffold.extend(fvs_2approx(g, RED)?);
    let scaffold: Vec<_> = scaffold.into_iter().collect();

    let mut candidates = Vec::new();
    let mut failure = None;
    for size in 0..=budget.min(scaffold.len()) {
        for_each_combination(scaffold.len(), size, |idx| {
            let guessed: VertexSet = idx.iter().map(|&i| scaffold[i]).collect();
            let rest: VertexSet = scaffold.iter().copied().filter(|v| !guessed.contains(v)).collect();
            let reduced = g.delete_vertices(guessed.iter().copied());
            match enumerate_disjoint_dfvs(&reduced, &rest, budget - guessed.len()) {
                Ok(found) => {
                    candidates.extend(found.into_iter().map(|mut s| {
                        s.extend(guessed.iter().copied());
                        s
                    }));
                    true
                }
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(keep_minimal_solutions(g, candidates, budget, &VertexSet::new()).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn fam(sets: &[&[VertexId]]) -> Family {
        sets.iter().map(|s| set(s)).collect()
    }

    fn two_triangles() -> EdgeColoredGraph {
        EdgeColoredGraph::new(2, 1..=5, [(1, 2, 1), (2, 3, 1), (1, 3, 1), (3, 4, 2), (4, 5, 2), (3, 5, 2)])
            .unwrap()
    }

    #[test]
    fn solve_examples() {
        let g = two_triangles();
        assert_eq!(solve_dfvs(&g, 1).unwrap(), Some(set(&[3])));
        assert_eq!(solve_dfvs(&g, 0).unwrap(), None);
        let forest = EdgeColoredGraph::new(2, 1..=3, [(1, 2, 1), (2, 3, 2)]).unwrap();
        assert_eq!(solve_dfvs(&forest, 0).unwrap(), Some(set(&[])));
    }

    #[test]
    fn enumeration_examples() {
        let g = two_triangles();
        let k2 = fam(&[&[3], &[1, 4], &[1, 5], &[2, 4], &[2, 5]]);
        assert_eq!(enumerate_dfvs_algo_a(&g, 1).unwrap(), fam(&[&[3]]));
        assert_eq!(enumerate_dfvs_algo_a(&g, 2).unwrap(), k2);
        assert_eq!(enumerate_minimal_dfvs(&g, 2).unwrap(), k2);
        assert!(enumerate_minimal_dfvs(&g, 0).unwrap().is_empty());

        let forest = EdgeColoredGraph::new(2, 1..=3, [(1, 2, 1), (2, 3, 2)]).unwrap();
        assert_eq!(enumerate_dfvs_algo_a(&forest, 2).unwrap(), fam(&[&[]]));

        let blue_tri = EdgeColoredGraph::new(2, 1..=3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)]).unwrap();
        assert_eq!(enumerate_minimal_dfvs(&blue_tri, 1).unwrap(), fam(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn needs_two_colors() {
        let g = EdgeColoredGraph::with_colors(3).unwrap();
        assert_eq!(solve_dfvs(&g, 1), Err(Error::WrongColorCount { expected: 2, found: 3 }));
    }
}
