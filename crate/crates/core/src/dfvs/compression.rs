//! Minimal solutions disjoint from a known solution, by reduction and
//! branching on the high-degree vertices.
//!
//! The instance is reduced with the known solution as reference set. Each
//! branch guesses which vertices of degree above two in some color belong to
//! the new solution, commits them, marks the others undeletable and reduces
//! again. What is left free has degree at most two in every color and is
//! searched exhaustively; results are expanded through the forced groups and
//! represents sets and finally filtered for minimality in the input graph.

use alloc::vec::Vec;

use crate::family::{keep_minimal_solutions, Family, VertexSet};
use crate::graph::{EdgeColoredGraph, VertexId};
use crate::reductions::ReducedInstance;
use crate::subsets::{for_each_combination, minimal_subsets};
use crate::{Error, Result};

use super::require_bicolored;

/// Multipliers of the reference-set size bounding the high-degree vertices and
/// the maximal paths per color of a branch that yields a solution.
pub const HIGH_VERTEX_FACTOR: usize = 28;
pub const PATH_FACTOR: usize = 16;

/// What one branch saw after its reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchRecord {
    /// High-degree vertices guessed into the solution.
    pub guessed: VertexSet,
    /// High-degree vertices of the reduced input (shared by all branches).
    pub high_vertices: usize,
    /// `None` when the branch was infeasible after reduction.
    pub path_counts: Option<Vec<usize>>,
    pub low_vertices: usize,
    pub low_bound_holds: bool,
    /// Expanded candidate solutions produced, before global filtering.
    pub solutions: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompressionReport {
    pub reference_size: usize,
    pub branches: Vec<BranchRecord>,
}

impl CompressionReport {
    /// Branches that produced a solution although the reduced graph exceeded
    /// `28 |S|` high-degree vertices or `16 |S|` maximal paths in some color.
    pub fn size_bound_violations(&self) -> Vec<&BranchRecord> {
        let s = self.reference_size;
        self.branches
            .iter()
            .filter(|b| b.solutions > 0)
            .filter(|b| {
                b.high_vertices > HIGH_VERTEX_FACTOR * s
                    || b.path_counts.iter().flatten().any(|&m| m > PATH_FACTOR * s)
            })
            .collect()
    }
}

/// Every inclusion-minimal dual feedback vertex set of `g` disjoint from
/// `reference` with at most `budget` vertices. `reference` must itself be a
/// dual feedback vertex set of `g`.
pub fn enumerate_disjoint_dfvs(g: &EdgeColoredGraph, reference: &VertexSet, budget: usize) -> Result<Family> {
    enumerate_disjoint_dfvs_with_report(g, reference, budget).map(|(family, _)| family)
}

pub fn enumerate_disjoint_dfvs_with_report(
    g: &EdgeColoredGraph,
    reference: &VertexSet,
    budget: usize,
) -> Result<(Family, CompressionReport)> {
    require_bicolored(g)?;
    if let Some(&v) = reference.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::UnknownVertex(v));
    }
    if !g.hits_all_monochromatic_cycles(reference) {
        return Err(Error::NotAFeedbackSet);
    }
    let mut report = CompressionReport { reference_size: reference.len(), branches: Vec::new() };

    let Some(top) = ReducedInstance::new(g.clone(), reference.clone())?.reduce() else {
        return Ok((Family::new(), report));
    };
    if top.forced().len() > budget {
        return Ok((Family::new(), report));
    }
    let high: Vec<VertexId> = top.classify_vertices().high_any().into_iter().collect();
    let room = budget - top.forced().len();

    let mut candidates: Vec<VertexSet> = Vec::new();
    for size in 0..=room.min(high.len()) {
        for_each_combination(high.len(), size, |idx| {
            let guessed: VertexSet = idx.iter().map(|&i| high[i]).collect();
            let rest: VertexSet = high.iter().copied().filter(|v| !guessed.contains(v)).collect();
            let branch = top
                .commit(&guessed)
                .and_then(|b| b.exclude(&rest))
                .expect("high vertices are free in the reduced instance")
                .reduce();
            let mut record = BranchRecord {
                guessed,
                high_vertices: high.len(),
                path_counts: None,
                low_vertices: 0,
                low_bound_holds: true,
                solutions: 0,
            };
            if let Some(branch) = branch {
                let class = branch.classify_vertices();
                debug_assert!(class.high_any().is_empty());
                record.path_counts = Some(class.path_counts.clone());
                record.low_vertices = class.low.len();
                record.low_bound_holds = class.low_bound_holds();
                if let Some(room) = budget.checked_sub(branch.forced().len()) {
                    let free = branch.free_vertices();
                    let found = minimal_subsets(free.len(), room, |idx| {
                        let picks: VertexSet = idx.iter().map(|&i| free[i]).collect();
                        branch.graph().hits_all_monochromatic_cycles(&picks)
                    });
                    for idx in found {
                        let picks: VertexSet = idx.into_iter().map(|i| free[i]).collect();
                        let expanded = branch.expand(&picks);
                        record.solutions += expanded.len();
                        candidates.extend(expanded);
                    }
                }
            }
            report.branches.push(record);
            true
        });
    }

    let (family, non_minimal) = keep_minimal_solutions(g, candidates, budget, reference);
    if non_minimal > 0 {
        log::debug!("disjoint enumeration dropped {non_minimal} non-minimal candidates");
    }
    Ok((family, report))
}
