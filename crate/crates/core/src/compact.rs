//! Compact representations of minimal feedback vertex sets of one color class.
//!
//! A compact representation is a sequence of pairwise disjoint vertex sets; it
//! stands for every set that picks exactly one vertex from each of them.
//!
//! The enumerator strips vertices of degree at most one, merges every maximal
//! chain of degree-two vertices (including whole cycle components) into its
//! lowest id, and searches the minimal feedback vertex sets of the remaining
//! multigraph exhaustively. Vertices on one chain lie on exactly the same
//! cycles, so each reduced solution expands into a family of minimal solutions
//! of the input and every minimal solution is reached this way.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::family::{transversals, Family, VertexSet};
use crate::graph::{Color, EdgeColoredGraph, VertexId};
use crate::subsets::minimal_subsets;
use crate::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompactRepresentation {
    // sorted, so equal representations compare equal
    sets: Vec<VertexSet>,
}

impl CompactRepresentation {
    pub fn new(mut sets: Vec<VertexSet>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for s in &sets {
            if s.is_empty() {
                return Err(Error::EmptyRepresentationSet);
            }
            for &v in s {
                if !seen.insert(v) {
                    return Err(Error::RepresentationNotDisjoint(v));
                }
            }
        }
        sets.sort();
        Ok(CompactRepresentation { sets })
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Number of represented solutions: the product of the set sizes.
    pub fn solution_count(&self) -> usize {
        self.sets.iter().map(BTreeSet::len).product()
    }

    pub fn represented_solutions(&self) -> Family {
        transversals(&self.sets).into_iter().collect()
    }
}

/// `{1,2,3} {7}`; the empty representation prints as an empty string.
impl fmt::Display for CompactRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, v) in s.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Every inclusion-minimal feedback vertex set of color class `color` with at
/// most `budget` vertices, by plain subset search over the vertices touching
/// that color.
pub fn enumerate_minimal_fvs(g: &EdgeColoredGraph, color: Color, budget: usize) -> Result<Family> {
    let class = g.color_class(color)?;
    let candidates: Vec<VertexId> = class
        .vertices()
        .iter()
        .copied()
        .filter(|&v| class.edges().iter().any(|e| e.touches(v)))
        .collect();
    let found = minimal_subsets(candidates.len(), budget, |idx| {
        let set: VertexSet = idx.iter().map(|&i| candidates[i]).collect();
        class.hits_all_monochromatic_cycles(&set)
    });
    Ok(found.into_iter().map(|idx| idx.into_iter().map(|i| candidates[i]).collect()).collect())
}

/// Compact representations covering exactly the minimal feedback vertex sets of
/// color class `color` with at most `budget` vertices. Representations are
/// distinct and returned in canonical order. An acyclic class yields the
/// single empty representation; no representation is returned when every
/// feedback vertex set exceeds the budget.
pub fn enumerate_fvs_compact_reps(
    g: &EdgeColoredGraph,
    color: Color,
    budget: usize,
) -> Result<Vec<CompactRepresentation>> {
    let (reduced, represents) = compress_chains(&g.color_class(color)?);
    let candidates: Vec<VertexId> = reduced.vertices().iter().copied().collect();
    let found = minimal_subsets(candidates.len(), budget, |idx| {
        let set: VertexSet = idx.iter().map(|&i| candidates[i]).collect();
        reduced.hits_all_monochromatic_cycles(&set)
    });
    let reps: BTreeSet<CompactRepresentation> = found
        .into_iter()
        .map(|idx| {
            let sets = idx
                .into_iter()
                .map(|i| {
                    let v = candidates[i];
                    represents.get(&v).cloned().unwrap_or_else(|| VertexSet::from([v]))
                })
                .collect();
            CompactRepresentation::new(sets).expect("chains are disjoint")
        })
        .collect();
    Ok(reps.into_iter().collect())
}

/// Removes degree-0/1 vertices of a single-color graph, then dissolves each
/// chain of degree-2 vertices into its lowest id. Returns the reduced graph and
/// the non-singleton represents sets.
fn compress_chains(class: &EdgeColoredGraph) -> (EdgeColoredGraph, BTreeMap<VertexId, VertexSet>) {
    let mut g = class.clone();
    loop {
        let low: Vec<VertexId> =
            g.vertices().iter().copied().filter(|&v| g.degree_in(v, 1) <= 1).collect();
        if low.is_empty() {
            break;
        }
        g = g.delete_vertices(low);
    }

    let chain_vertex = |g: &EdgeColoredGraph, v: VertexId| g.degree_in(v, 1) == 2 && !g.has_loop_at(v);
    let members: BTreeSet<VertexId> =
        g.vertices().iter().copied().filter(|&v| chain_vertex(&g, v)).collect();
    let mut chains: Vec<Vec<VertexId>> = Vec::new();
    let mut seen = BTreeSet::new();
    for &start in &members {
        if !seen.insert(start) {
            continue;
        }
        let mut chain = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for e in g.edges().iter().filter(|e| e.touches(x)) {
                let y = e.other(x);
                if members.contains(&y) && seen.insert(y) {
                    chain.push(y);
                    stack.push(y);
                }
            }
        }
        chain.sort_unstable();
        chains.push(chain);
    }

    // dissolving a chain vertex keeps the degree of every other vertex
    let mut represents = BTreeMap::new();
    for chain in chains.into_iter().filter(|c| c.len() > 1) {
        let keep = chain[0];
        for &v in chain[1..].iter().rev() {
            g = g.dissolve(v).expect("chain vertices have degree 2 and no self-loop");
        }
        represents.insert(keep, chain.into_iter().collect::<VertexSet>());
    }
    (g, represents)
}
