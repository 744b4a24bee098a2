//! Multi feedback vertex set on graphs with `h` edge colors.
//!
//! Given one compact representation per color, a vertex set of size at most
//! `k` meeting every represented set exists iff the domination graph below has
//! a dominating set of size at most `k + 1`:
//!
//! * one copy-vertex per graph vertex and one set-vertex per represented set,
//!   a copy joined to the set-vertices of the sets containing its vertex;
//! * an apex pair `v* u*`, with `v*` joined to every copy-vertex.
//!
//! Sets of one representation are disjoint, so a copy-vertex has degree at
//! most `h + 1` and the graph is `(h + 1)`-degenerate and bipartite.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::adjacency::AdjacencyGraph;
use crate::compact::{enumerate_fvs_compact_reps, CompactRepresentation};
use crate::family::{keep_minimal_solutions, transversals, Family, VertexSet};
use crate::graph::{Color, EdgeColoredGraph, VertexId};
use crate::subsets::minimal_subsets;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationNode {
    Copy(VertexId),
    Set { color: Color, index: usize },
    ApexV,
    ApexU,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationGraph {
    graph: AdjacencyGraph,
    nodes: Vec<DominationNode>,
    copies: usize,
    // members of the set behind each set-vertex, in node order
    sets: Vec<VertexSet>,
}

/// Measured shape of a domination graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominationStructure {
    pub bipartite: bool,
    pub max_copy_degree: usize,
    pub degeneracy: usize,
    /// Every set-vertex has at least one copy neighbor.
    pub sets_attached: bool,
}

impl DominationStructure {
    pub fn within_bounds(&self, colors: usize) -> bool {
        self.bipartite
            && self.sets_attached
            && self.max_copy_degree <= colors + 1
            && self.degeneracy <= colors + 1
    }
}

impl DominationGraph {
    pub fn graph(&self) -> &AdjacencyGraph {
        &self.graph
    }

    pub fn nodes(&self) -> &[DominationNode] {
        &self.nodes
    }

    pub fn copy_nodes(&self) -> Range<usize> {
        0..self.copies
    }

    pub fn set_nodes(&self) -> Range<usize> {
        self.copies..self.copies + self.sets.len()
    }

    pub fn apex_v(&self) -> usize {
        self.copies + self.sets.len()
    }

    pub fn apex_u(&self) -> usize {
        self.apex_v() + 1
    }

    pub fn copy_node(&self, v: VertexId) -> Option<usize> {
        self.nodes[..self.copies].iter().position(|n| *n == DominationNode::Copy(v))
    }

    /// Members of the set behind a set-vertex.
    pub fn set_members(&self, node: usize) -> Option<&VertexSet> {
        node.checked_sub(self.copies).and_then(|i| self.sets.get(i))
    }

    pub fn structure(&self) -> DominationStructure {
        DominationStructure {
            bipartite: self.graph.is_bipartite(),
            max_copy_degree: self.copy_nodes().map(|c| self.graph.degree(c)).max().unwrap_or(0),
            degeneracy: self.graph.degeneracy(),
            sets_attached: self
                .set_nodes()
                .all(|s| self.graph.neighbors(s).any(|c| self.copy_nodes().contains(&c))),
        }
    }

    /// Graph vertices grouped by identical set-vertex neighborhoods; vertices
    /// in no set are left out. Members of one class are interchangeable.
    pub fn copy_classes(&self) -> Vec<(Vec<usize>, VertexSet)> {
        let mut classes: BTreeMap<Vec<usize>, VertexSet> = BTreeMap::new();
        for c in self.copy_nodes() {
            let DominationNode::Copy(v) = self.nodes[c] else { unreachable!() };
            let hood: Vec<usize> =
                self.graph.neighbors(c).filter(|n| self.set_nodes().contains(n)).collect();
            if !hood.is_empty() {
                classes.entry(hood).or_default().insert(v);
            }
        }
        classes.into_iter().collect()
    }
}

/// Builds the domination graph for one representation per color of `g`.
pub fn build_domination_graph(g: &EdgeColoredGraph, reps: &[CompactRepresentation]) -> Result<DominationGraph> {
    if reps.len() != g.colors() {
        return Err(Error::WrongColorCount { expected: g.colors(), found: reps.len() });
    }
    let copies = g.vertex_count();
    let mut nodes: Vec<DominationNode> = g.vertices().iter().map(|&v| DominationNode::Copy(v)).collect();
    let mut sets = Vec::new();
    for (ci, rep) in reps.iter().enumerate() {
        for (index, s) in rep.sets().iter().enumerate() {
            if let Some(&v) = s.iter().find(|&&v| !g.contains(v)) {
                return Err(Error::UnknownVertex(v));
            }
            nodes.push(DominationNode::Set { color: ci + 1, index });
            sets.push(s.clone());
        }
    }
    nodes.push(DominationNode::ApexV);
    nodes.push(DominationNode::ApexU);

    let mut graph = AdjacencyGraph::new(nodes.len());
    let copy_of = |v: VertexId| g.dense_index(v).expect("member is live");
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            graph.add_edge(copy_of(v), copies + i);
        }
    }
    let apex_v = copies + sets.len();
    graph.add_edge(apex_v, apex_v + 1);
    for c in 0..copies {
        graph.add_edge(apex_v, c);
    }
    let h = DominationGraph { graph, nodes, copies, sets };
    debug_assert!(h.structure().within_bounds(g.colors()));
    Ok(h)
}

/// A dominating set of at most `limit` nodes, if one exists. Branches over the
/// closed neighborhood of an undominated node of minimum degree.
pub fn dominating_set_at_most(h: &AdjacencyGraph, limit: usize) -> Option<Vec<usize>> {
    fn search(h: &AdjacencyGraph, limit: usize, chosen: &mut Vec<usize>, hits: &mut [usize]) -> bool {
        let target = (0..h.node_count()).filter(|&v| hits[v] == 0).min_by_key(|&v| h.degree(v));
        let Some(u) = target else { return true };
        if chosen.len() == limit {
            return false;
        }
        let mut options: Vec<usize> = h.neighbors(u).collect();
        options.push(u);
        options.sort_unstable();
        for w in options {
            chosen.push(w);
            hits[w] += 1;
            h.neighbors(w).for_each(|x| hits[x] += 1);
            if search(h, limit, chosen, hits) {
                return true;
            }
            hits[w] -= 1;
            h.neighbors(w).for_each(|x| hits[x] -= 1);
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    let mut hits = vec![0; h.node_count()];
    search(h, limit, &mut chosen, &mut hits).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

/// Turns a dominating set into graph vertices: copies map to their vertex, a
/// set-vertex to the lowest member of its set, and the apex pair is dropped.
pub fn extract_mfvs_from_dominating(h: &DominationGraph, dominating: &[usize]) -> Result<VertexSet> {
    if dominating.iter().any(|&d| d >= h.nodes.len()) || !h.graph.is_dominating(dominating) {
        return Err(Error::NotDominating);
    }
    let mut out = VertexSet::new();
    for &d in dominating {
        match h.nodes[d] {
            DominationNode::Copy(v) => {
                out.insert(v);
            }
            DominationNode::Set { .. } => {
                out.extend(h.set_members(d).and_then(|s| s.first()).copied());
            }
            DominationNode::ApexV | DominationNode::ApexU => {}
        }
    }
    debug_assert!(h.sets.iter().all(|s| !s.is_disjoint(&out)));
    Ok(out)
}

fn reps_per_color(g: &EdgeColoredGraph, budget: usize) -> Result<Vec<Vec<CompactRepresentation>>> {
    (1..=g.colors()).map(|c| enumerate_fvs_compact_reps(g, c, budget)).collect()
}

/// Calls `f` on every choice of one representation per color, in lexicographic
/// order; stops when `f` returns false.
fn for_each_rep_tuple<F>(per_color: &[Vec<CompactRepresentation>], mut f: F)
where
    F: FnMut(&[CompactRepresentation]) -> bool,
{
    if per_color.iter().any(Vec::is_empty) {
        return;
    }
    let mut pos = vec![0; per_color.len()];
    loop {
        let tuple: Vec<CompactRepresentation> =
            pos.iter().enumerate().map(|(c, &i)| per_color[c][i].clone()).collect();
        if !f(&tuple) {
            return;
        }
        let mut c = per_color.len();
        loop {
            if c == 0 {
                return;
            }
            c -= 1;
            pos[c] += 1;
            if pos[c] < per_color[c].len() {
                break;
            }
            pos[c] = 0;
        }
    }
}

/// A vertex set of at most `budget` vertices meeting every monochromatic
/// cycle, if one exists.
pub fn solve_mfvs(g: &EdgeColoredGraph, budget: usize) -> Result<Option<VertexSet>> {
    let per_color = reps_per_color(g, budget)?;
    let mut answer = None;
    let mut failure = None;
    for_each_rep_tuple(&per_color, |tuple| {
        let h = match build_domination_graph(g, tuple) {
            Ok(h) => h,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        if let Some(d) = dominating_set_at_most(h.graph(), budget + 1) {
            match extract_mfvs_from_dominating(&h, &d) {
                Ok(s) => {
                    debug_assert!(s.len() <= budget && g.hits_all_monochromatic_cycles(&s));
                    answer = Some(s);
                    return false;
                }
                Err(e) => failure = Some(e),
            }
        }
        failure.is_none()
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(answer),
    }
}

/// All inclusion-minimal vertex sets of at most `budget` vertices meeting every
/// monochromatic cycle. Per representation tuple, copy-vertices with equal
/// neighborhoods are collapsed into classes and minimal class selections that
/// dominate all set-vertices are searched exhaustively.
pub fn enumerate_minimal_mfvs(g: &EdgeColoredGraph, budget: usize) -> Result<Family> {
    let per_color = reps_per_color(g, budget)?;
    let mut candidates = Vec::new();
    let mut failure = None;
    for_each_rep_tuple(&per_color, |tuple| {
        let h = match build_domination_graph(g, tuple) {
            Ok(h) => h,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        let classes = h.copy_classes();
        let set_count = h.set_nodes().len();
        let first_set = h.set_nodes().start;
        let found = minimal_subsets(classes.len(), budget, |idx| {
            let mut hit = vec![false; set_count];
            for &i in idx {
                for &s in &classes[i].0 {
                    hit[s - first_set] = true;
                }
            }
            hit.into_iter().all(|x| x)
        });
        for idx in found {
            let groups: Vec<VertexSet> = idx.into_iter().map(|i| classes[i].1.clone()).collect();
            candidates.extend(transversals(&groups));
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(keep_minimal_solutions(g, candidates, budget, &VertexSet::new()).0)
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

    fn three_triangles() -> EdgeColoredGraph {
        EdgeColoredGraph::new(
            3,
            1..=7,
            [(1, 2, 1), (2, 3, 1), (1, 3, 1), (1, 4, 2), (4, 5, 2), (1, 5, 2), (1, 6, 3), (6, 7, 3), (1, 7, 3)],
        )
        .unwrap()
    }

    #[test]
    fn domination_graph_shape() {
        let g = EdgeColoredGraph::new(2, 1..=3, []).unwrap();
        let h = build_domination_graph(&g, &[rep(&[&[1], &[2]]), rep(&[&[1, 3]])]).unwrap();
        assert_eq!(h.copy_nodes().len(), 3);
        assert_eq!(h.set_nodes().len(), 3);
        // copies 0,1,2 = vertices 1,2,3 ; sets 3,4,5
        for (a, b) in [(0, 3), (1, 4), (0, 5), (2, 5)] {
            assert!(h.graph().has_edge(a, b));
        }
        assert!(!h.graph().has_edge(2, 3));
        assert!(h.graph().has_edge(h.apex_v(), h.apex_u()));
        assert!(h.structure().within_bounds(2));

        let none = build_domination_graph(&g, &[rep(&[]), rep(&[])]).unwrap();
        assert_eq!(dominating_set_at_most(none.graph(), 1), Some(vec![none.apex_v()]));

        let g1 = EdgeColoredGraph::new(1, 1..=3, []).unwrap();
        let h = build_domination_graph(&g1, &[rep(&[&[1, 2, 3]])]).unwrap();
        assert_eq!(h.graph().degree(h.set_nodes().start), 3);

        assert!(build_domination_graph(&g, &[rep(&[])]).is_err());
    }

    #[test]
    fn dominating_sets() {
        let star = AdjacencyGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(dominating_set_at_most(&star, 1), Some(vec![0]));
        let p4 = AdjacencyGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(dominating_set_at_most(&p4, 1), None);
        let d = dominating_set_at_most(&p4, 2).unwrap();
        assert_eq!(d.len(), 2);
        assert!(p4.is_dominating(&d));
    }

    #[test]
    fn extraction() {
        let g = EdgeColoredGraph::new(2, 1..=3, []).unwrap();
        let h = build_domination_graph(&g, &[rep(&[&[1], &[2]]), rep(&[&[1, 3]])]).unwrap();
        let d = [h.apex_v(), h.copy_node(1).unwrap(), h.copy_node(2).unwrap()];
        assert_eq!(extract_mfvs_from_dominating(&h, &d).unwrap(), set(&[1, 2]));
        // s3 (node 5) replaced by its lowest member
        let d = [h.apex_v(), 3, 4, 5];
        assert_eq!(extract_mfvs_from_dominating(&h, &d).unwrap(), set(&[1, 2]));
        let d = [3, 4, 2];
        assert_eq!(extract_mfvs_from_dominating(&h, &d), Err(Error::NotDominating));

        let empty = EdgeColoredGraph::new(2, [], []).unwrap();
        let h = build_domination_graph(&empty, &[rep(&[]), rep(&[])]).unwrap();
        assert_eq!(extract_mfvs_from_dominating(&h, &[h.apex_v()]).unwrap(), set(&[]));
    }

    #[test]
    fn solving_and_enumerating() {
        let g = three_triangles();
        assert_eq!(solve_mfvs(&g, 1).unwrap(), Some(set(&[1])));
        assert_eq!(enumerate_minimal_mfvs(&g, 1).unwrap(), [set(&[1])].into_iter().collect());
        assert_eq!(solve_mfvs(&g, 0).unwrap(), None);

        let forest = EdgeColoredGraph::new(3, 1..=3, [(1, 2, 1), (2, 3, 3)]).unwrap();
        assert_eq!(solve_mfvs(&forest, 0).unwrap(), Some(set(&[])));
        assert_eq!(enumerate_minimal_mfvs(&forest, 0).unwrap(), [set(&[])].into_iter().collect());

        let two = EdgeColoredGraph::new(2, 1..=5, [(1, 2, 1), (2, 3, 1), (1, 3, 1), (3, 4, 2), (4, 5, 2), (3, 5, 2)])
            .unwrap();
        let expected: Family =
            [set(&[3]), set(&[1, 4]), set(&[1, 5]), set(&[2, 4]), set(&[2, 5])].into_iter().collect();
        assert_eq!(enumerate_minimal_mfvs(&two, 2).unwrap(), expected);
    }
}
