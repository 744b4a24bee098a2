//! Brute-force reference answers. Deliberately independent of the rest of the
//! crate: acyclicity is checked by edge counting rather than union-find and
//! subsets are walked as bitmasks.

use alloc::vec;
use alloc::vec::Vec;

use crate::adjacency::AdjacencyGraph;
use crate::dfvs::CoverGraph;
use crate::family::{Family, VertexSet};
use crate::graph::{EdgeColoredGraph, VertexId};
use crate::{Error, Result};

pub const MAX_FAMILY_VERTICES: usize = 16;
pub const MAX_FAMILY_BUDGET: usize = 6;
pub const MAX_COVER_EDGES: usize = 20;
pub const MAX_DOMINATION_NODES: usize = 14;

fn cap(what: &'static str, limit: usize, found: usize) -> Result<()> {
    if found > limit {
        Err(Error::OracleCapExceeded { what, limit, found })
    } else {
        Ok(())
    }
}

/// Masks over `0..n` with exactly `k` bits, ascending (Gosper's hack).
fn masks_with_popcount(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = (k <= n).then_some(first);
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let m = (((r ^ cur) >> 2) / c) | r;
            (m < limit).then_some(m)
        };
        Some(cur)
    })
}

struct DenseGraph {
    ids: Vec<VertexId>,
    colors: usize,
    // (a, b, color) over dense indices
    edges: Vec<(usize, usize, usize)>,
}

impl DenseGraph {
    fn new(g: &EdgeColoredGraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().iter().copied().collect();
        let at = |v: VertexId| ids.iter().position(|&x| x == v).expect("endpoint is live");
        let edges = g.edges().iter().map(|e| (at(e.u), at(e.v), e.color)).collect();
        DenseGraph { ids, colors: g.colors(), edges }
    }

    /// Every color class of the graph without the vertices in `deleted` is a
    /// forest: a multigraph is a forest iff it has no loop and exactly
    /// `vertices - components` edges.
    fn forest_after_deleting(&self, deleted: u64) -> bool {
        let n = self.ids.len();
        let alive = |v: usize| deleted & (1 << v) == 0;
        let kept = (0..n).filter(|&v| alive(v)).count();
        (1..=self.colors).all(|c| {
            let edges: Vec<(usize, usize)> = self
                .edges
                .iter()
                .filter(|&&(a, b, col)| col == c && alive(a) && alive(b))
                .map(|&(a, b, _)| (a, b))
                .collect();
            if edges.iter().any(|&(a, b)| a == b) {
                return false;
            }
            let mut label: Vec<usize> = (0..n).collect();
            // propagate minimum labels until stable
            loop {
                let mut changed = false;
                for &(a, b) in &edges {
                    let m = label[a].min(label[b]);
                    if label[a] != m || label[b] != m {
                        label[a] = m;
                        label[b] = m;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            let components = (0..n).filter(|&v| alive(v) && label[v] == v).count();
            edges.len() == kept - components
        })
    }

    fn to_set(&self, mask: u64) -> VertexSet {
        (0..self.ids.len()).filter(|&i| mask & (1 << i) != 0).map(|i| self.ids[i]).collect()
    }
}

/// All inclusion-minimal vertex sets of at most `budget` vertices whose
/// deletion leaves every color class acyclic. At most 16 vertices and budget 6.
pub fn oracle_minimal_mfvs_family(g: &EdgeColoredGraph, budget: usize) -> Result<Family> {
    cap("vertex count", MAX_FAMILY_VERTICES, g.vertex_count())?;
    cap("budget", MAX_FAMILY_BUDGET, budget)?;
    let dense = DenseGraph::new(g);
    let n = dense.ids.len();
    let mut found: Vec<u64> = Vec::new();
    for size in 0..=budget.min(n) {
        let fresh: Vec<u64> = masks_with_popcount(n, size)
            .filter(|&m| found.iter().all(|&f| f & !m != 0))
            .filter(|&m| dense.forest_after_deleting(m))
            .collect();
        found.extend(fresh);
    }
    Ok(found.into_iter().map(|m| dense.to_set(m)).collect())
}

/// A minimum vertex set whose deletion leaves every color class acyclic.
/// At most 16 vertices.
pub fn oracle_minimum_mfvs(g: &EdgeColoredGraph) -> Result<VertexSet> {
    cap("vertex count", MAX_FAMILY_VERTICES, g.vertex_count())?;
    let dense = DenseGraph::new(g);
    let n = dense.ids.len();
    (0..=n)
        .find_map(|size| masks_with_popcount(n, size).find(|&m| dense.forest_after_deleting(m)))
        .map(|m| dense.to_set(m))
        .ok_or(Error::NotAFeedbackSet)
}

/// A minimum set of edges (indices) touching every non-isolated set-vertex.
/// At most 20 edges.
pub fn oracle_min_edge_cover(h: &CoverGraph) -> Result<Vec<usize>> {
    let edges = h.edges();
    cap("edge count", MAX_COVER_EDGES, edges.len())?;
    let n = h.set_vertices().len();
    let mut need = vec![false; n];
    for e in edges {
        need[e.blue] = true;
        need[e.red] = true;
    }
    for size in 0..=edges.len() {
        for mask in masks_with_popcount(edges.len(), size) {
            let mut covered = vec![false; n];
            for (i, e) in edges.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    covered[e.blue] = true;
                    covered[e.red] = true;
                }
            }
            if (0..n).all(|s| covered[s] || !need[s]) {
                return Ok((0..edges.len()).filter(|&i| mask & (1 << i) != 0).collect());
            }
        }
    }
    unreachable!("all edges together cover every non-isolated vertex")
}

/// A minimum dominating set (node indices). At most 14 nodes.
pub fn oracle_min_dominating_set(h: &AdjacencyGraph) -> Result<Vec<usize>> {
    let n = h.node_count();
    cap("node count", MAX_DOMINATION_NODES, n)?;
    let closed: Vec<u64> = (0..n).map(|v| h.neighbors(v).fold(1u64 << v, |m, u| m | (1 << u))).collect();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    for size in 0..=n {
        for mask in masks_with_popcount(n, size) {
            let dominated = (0..n).filter(|&v| mask & (1 << v) != 0).fold(0, |acc, v| acc | closed[v]);
            if dominated == all {
                return Ok((0..n).filter(|&v| mask & (1 << v) != 0).collect());
            }
        }
    }
    unreachable!("the full node set dominates")
}
