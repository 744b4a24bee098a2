//! The cover graph built from one blue and one red compact representation.
//!
//! Every set becomes a set-vertex; a blue and a red set-vertex are joined when
//! their sets intersect, and the edge remembers the lowest shared vertex as its
//! witness. A minimum vertex set hitting every set of both representations is
//! read off a minimum edge cover of this bipartite graph.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::compact::CompactRepresentation;
use crate::family::VertexSet;
use crate::graph::VertexId;
use crate::subsets::minimal_subsets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Blue,
    Red,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetVertex {
    pub side: Side,
    /// Position of the set within its representation.
    pub index: usize,
    pub members: VertexSet,
}

/// An edge between a blue set-vertex and a red set-vertex (indices into
/// [`CoverGraph::set_vertices`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverEdge {
    pub blue: usize,
    pub red: usize,
    pub witness: VertexId,
}

impl CoverEdge {
    pub fn touches(&self, s: usize) -> bool {
        self.blue == s || self.red == s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGraph {
    set_vertices: Vec<SetVertex>,
    edges: Vec<CoverEdge>,
}

/// A set-vertex or an edge of a [`CoverGraph`], selected when covering it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoverElement {
    SetVertex(usize),
    Edge(usize),
}

impl CoverGraph {
    pub fn set_vertices(&self) -> &[SetVertex] {
        &self.set_vertices
    }

    pub fn edges(&self) -> &[CoverEdge] {
        &self.edges
    }

    pub fn degree(&self, s: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(s)).count()
    }

    pub fn is_isolated(&self, s: usize) -> bool {
        !self.edges.iter().any(|e| e.touches(s))
    }

    pub fn non_isolated_count(&self) -> usize {
        (0..self.set_vertices.len()).filter(|&s| !self.is_isolated(s)).count()
    }

    /// The original vertices an element stands for: a set-vertex its whole set,
    /// an edge the intersection of its two sets.
    pub fn element_members(&self, element: CoverElement) -> VertexSet {
        match element {
            CoverElement::SetVertex(s) => self.set_vertices[s].members.clone(),
            CoverElement::Edge(e) => {
                let CoverEdge { blue, red, .. } = self.edges[e];
                self.set_vertices[blue]
                    .members
                    .intersection(&self.set_vertices[red].members)
                    .copied()
                    .collect()
            }
        }
    }
}

pub fn build_cover_graph(blue: &CompactRepresentation, red: &CompactRepresentation) -> CoverGraph {
    let mut set_vertices = Vec::with_capacity(blue.len() + red.len());
    for (side, rep) in [(Side::Blue, blue), (Side::Red, red)] {
        for (index, members) in rep.sets().iter().enumerate() {
            set_vertices.push(SetVertex { side, index, members: members.clone() });
        }
    }
    let mut edges = Vec::new();
    for (i, b) in blue.sets().iter().enumerate() {
        for (j, r) in red.sets().iter().enumerate() {
            // parallel intersections collapse into one edge
            if let Some(&witness) = b.intersection(r).next() {
                edges.push(CoverEdge { blue: i, red: blue.len() + j, witness });
            }
        }
    }
    CoverGraph { set_vertices, edges }
}

/// A maximum matching of the bipartite cover graph, as sorted edge indices.
/// Augmenting paths are searched from every blue set-vertex until none is left.
pub fn max_matching(h: &CoverGraph) -> Vec<usize> {
    let n = h.set_vertices.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in h.edges.iter().enumerate() {
        adj[e.blue].push((e.red, i));
    }
    // matched edge index per red set-vertex
    let mut mate: Vec<Option<usize>> = vec![None; n];

    fn augment(
        x: usize,
        h: &CoverGraph,
        adj: &[Vec<(usize, usize)>],
        mate: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &(y, e) in &adj[x] {
            if visited[y] {
                continue;
            }
            visited[y] = true;
            let free = match mate[y] {
                None => true,
                Some(m) => augment(h.edges[m].blue, h, adj, mate, visited),
            };
            if free {
                mate[y] = Some(e);
                return true;
            }
        }
        false
    }

    for x in (0..n).filter(|&s| h.set_vertices[s].side == Side::Blue) {
        let mut visited = vec![false; n];
        augment(x, h, &adj, &mut mate, &mut visited);
    }
    let mut out: Vec<usize> = mate.into_iter().flatten().collect();
    out.sort_unstable();
    out
}

/// A minimum edge set touching every non-isolated set-vertex: a maximum
/// matching plus one edge for each non-isolated vertex it leaves uncovered.
pub fn min_edge_cover(h: &CoverGraph) -> Vec<usize> {
    let mut cover = max_matching(h);
    let mut covered = vec![false; h.set_vertices.len()];
    for &e in &cover {
        covered[h.edges[e].blue] = true;
        covered[h.edges[e].red] = true;
    }
    // uncovered set-vertices are pairwise non-adjacent, so each needs its own edge
    for (s, _) in covered.iter().enumerate().filter(|(_, &c)| !c) {
        cover.extend(h.edges.iter().position(|e| e.touches(s)));
    }
    cover.sort_unstable();
    cover
}

/// A minimum vertex set meeting every set of both representations: the
/// witnesses of a minimum edge cover plus the lowest member of every isolated
/// set-vertex.
pub fn min_hitting_from_reps(blue: &CompactRepresentation, red: &CompactRepresentation) -> VertexSet {
    let h = build_cover_graph(blue, red);
    let mut out: VertexSet = min_edge_cover(&h).into_iter().map(|e| h.edges[e].witness).collect();
    for (s, sv) in h.set_vertices.iter().enumerate() {
        if h.is_isolated(s) {
            out.extend(sv.members.first().copied());
        }
    }
    out
}

/// Every inclusion-minimal selection of at most `budget` set-vertices and
/// edges that covers all set-vertices. An edge covers both of its endpoints.
pub fn enumerate_minimal_covers(h: &CoverGraph, budget: usize) -> Vec<BTreeSet<CoverElement>> {
    let elements: Vec<CoverElement> = (0..h.set_vertices.len())
        .map(CoverElement::SetVertex)
        .chain((0..h.edges.len()).map(CoverElement::Edge))
        .collect();
    let n = h.set_vertices.len();
    minimal_subsets(elements.len(), budget, |idx| {
        let mut covered = vec![false; n];
        for &i in idx {
            match elements[i] {
                CoverElement::SetVertex(s) => covered[s] = true,
                CoverElement::Edge(e) => {
                    covered[h.edges[e].blue] = true;
                    covered[h.edges[e].red] = true;
                }
            }
        }
        covered.into_iter().all(|c| c)
    })
    .into_iter()
    .map(|idx| idx.into_iter().map(|i| elements[i]).collect())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn rep(sets: &[&[VertexId]]) -> CompactRepresentation {
        CompactRepresentation::new(sets.iter().map(|s| set(s)).collect()).unwrap()
    }

    /// Cover graph whose edges are exactly the given (blue, red) index pairs.
    fn bipartite(blue: usize, red: usize, edges: &[(usize, usize)]) -> CoverGraph {
        let mut b: Vec<VertexSet> = (0..blue).map(|i| set(&[1000 + i as VertexId])).collect();
        let mut r: Vec<VertexSet> = (0..red).map(|i| set(&[2000 + i as VertexId])).collect();
        for (k, &(i, j)) in edges.iter().enumerate() {
            b[i].insert(k as VertexId + 1);
            r[j].insert(k as VertexId + 1);
        }
        // canonical sorting may permute the sets; only the structure matters here
        build_cover_graph(
            &CompactRepresentation::new(b).unwrap(),
            &CompactRepresentation::new(r).unwrap(),
        )
    }

    #[test]
    fn building() {
        let h = build_cover_graph(&rep(&[&[1, 2, 3]]), &rep(&[&[3, 4, 5]]));
        assert_eq!(h.set_vertices().len(), 2);
        assert_eq!(h.edges(), &[CoverEdge { blue: 0, red: 1, witness: 3 }]);

        let h = build_cover_graph(&rep(&[&[1]]), &rep(&[&[4]]));
        assert!(h.edges().is_empty());

        let h = build_cover_graph(&rep(&[&[1], &[2]]), &rep(&[&[1, 2]]));
        assert_eq!(h.set_vertices().len(), 3);
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.element_members(CoverElement::Edge(1)), set(&[2]));
    }

    #[test]
    fn matchings_and_covers() {
        let single = bipartite(1, 1, &[(0, 0)]);
        assert_eq!(max_matching(&single).len(), 1);
        assert_eq!(min_edge_cover(&single), vec![0]);

        let c4 = bipartite(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(max_matching(&c4).len(), 2);
        let cover = min_edge_cover(&c4);
        assert_eq!(cover.len(), 2);
        let e: Vec<CoverEdge> = cover.iter().map(|&i| c4.edges()[i]).collect();
        assert!(e[0].blue != e[1].blue && e[0].red != e[1].red);

        let star = bipartite(1, 3, &[(0, 0), (0, 1), (0, 2)]);
        assert_eq!(max_matching(&star).len(), 1);
        assert_eq!(min_edge_cover(&star).len(), 3);

        let p3 = bipartite(1, 2, &[(0, 0), (0, 1)]);
        assert_eq!(min_edge_cover(&p3).len(), 2);
    }

    #[test]
    fn hitting_sets() {
        assert_eq!(min_hitting_from_reps(&rep(&[&[1, 2, 3]]), &rep(&[&[3, 4, 5]])), set(&[3]));
        assert_eq!(min_hitting_from_reps(&rep(&[&[1]]), &rep(&[&[4]])), set(&[1, 4]));
        assert_eq!(min_hitting_from_reps(&rep(&[]), &rep(&[])), set(&[]));
    }

    #[test]
    fn minimal_covers() {
        let h = build_cover_graph(&rep(&[&[1, 2, 3]]), &rep(&[&[3, 4, 5]]));
        let covers = enumerate_minimal_covers(&h, 2);
        let expected = vec![
            BTreeSet::from([CoverElement::Edge(0)]),
            BTreeSet::from([CoverElement::SetVertex(0), CoverElement::SetVertex(1)]),
        ];
        assert_eq!(covers, expected);

        let lonely = build_cover_graph(&rep(&[&[1]]), &rep(&[]));
        assert_eq!(enumerate_minimal_covers(&lonely, 1), vec![BTreeSet::from([CoverElement::SetVertex(0)])]);
        assert!(enumerate_minimal_covers(&h, 0).is_empty());
    }
}
