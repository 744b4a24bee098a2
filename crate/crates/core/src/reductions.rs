//! Solution-preserving reduction rules for instances with a reference set.
//!
//! A [`ReducedInstance`] describes the minimal solutions of an original graph
//! that avoid a reference set (and any vertices guessed out of the solution):
//! every such solution is one pick from each forced group plus, for every
//! vertex `t` of a minimal solution `T` of the current graph, one original
//! vertex from `represents(t)`.
//!
//! Basic rules:
//! * a free vertex with no edges is removed;
//! * an edge at a vertex of degree one in its color is removed;
//! * a free vertex with two edges of one color into a single component of the
//!   undeletable part (in that color) is forced, and so is a free vertex with a
//!   self-loop;
//! * a cycle inside the undeletable part makes the instance infeasible.
//!
//! Path rules merge interchangeable free vertices. Two free vertices whose
//! color degrees are all 0 or 2 and which lie on the same maximal path in every
//! color where they have degree 2 lie on exactly the same monochromatic cycles.
//! All but the lowest id of such a group are dissolved. In the two-color case
//! the groups with signature (path, none) / (none, path) are the degree-(2,0)
//! / (0,2) vertices of one maximal path and the groups (blue path, red path)
//! are the common vertices of a blue and a red maximal path.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::family::{transversals, VertexSet};
use crate::graph::{Color, DisjointSets, EdgeColoredGraph, VertexId, BLUE, RED};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    graph: EdgeColoredGraph,
    reference: VertexSet,
    excluded: VertexSet,
    forced: Vec<VertexSet>,
    // only non-singleton entries are stored
    represents: BTreeMap<VertexId, VertexSet>,
}

/// Partition of the free live vertices by color degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    /// `high[c - 1]`: free vertices with degree above two in color `c`.
    pub high: Vec<VertexSet>,
    /// Free vertices with degree at most two in every color.
    pub low: VertexSet,
    /// Number of maximal paths (cyclic ones included) per color.
    pub path_counts: Vec<usize>,
}

impl VertexClassification {
    pub fn high_blue(&self) -> &VertexSet {
        &self.high[BLUE - 1]
    }

    pub fn high_red(&self) -> &VertexSet {
        &self.high[RED - 1]
    }

    /// Union of the high sets over all colors.
    pub fn high_any(&self) -> VertexSet {
        self.high.iter().flatten().copied().collect()
    }

    /// Product bound on the low vertices: `|low| <= prod_c (paths_c + 1)`.
    pub fn low_bound_holds(&self) -> bool {
        let bound = self.path_counts.iter().fold(1usize, |acc, &m| acc.saturating_mul(m + 1));
        self.low.len() <= bound
    }
}

/// A maximal run of free vertices of degree two in one color. A cyclic path is
/// a whole cycle component of such vertices with no attachment point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonochromaticPath {
    pub color: Color,
    pub vertices: Vec<VertexId>,
    pub cyclic: bool,
}

impl ReducedInstance {
    /// Wraps `graph` with `reference` as the set no solution may touch.
    pub fn new(graph: EdgeColoredGraph, reference: VertexSet) -> Result<Self> {
        if let Some(&v) = reference.iter().find(|v| !graph.contains(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(ReducedInstance {
            graph,
            reference,
            excluded: VertexSet::new(),
            forced: Vec::new(),
            represents: BTreeMap::new(),
        })
    }

    pub fn graph(&self) -> &EdgeColoredGraph {
        &self.graph
    }

    pub fn reference(&self) -> &VertexSet {
        &self.reference
    }

    pub fn excluded(&self) -> &VertexSet {
        &self.excluded
    }

    /// Groups of original vertices; every solution takes exactly one vertex
    /// from each group.
    pub fn forced(&self) -> &[VertexSet] {
        &self.forced
    }

    /// The original vertices a live free vertex stands for.
    pub fn represents(&self, v: VertexId) -> VertexSet {
        self.represents.get(&v).cloned().unwrap_or_else(|| VertexSet::from([v]))
    }

    /// Live vertices outside the reference and excluded sets.
    pub fn is_free(&self, v: VertexId) -> bool {
        self.graph.contains(v) && !self.reference.contains(&v) && !self.excluded.contains(&v)
    }

    pub fn free_vertices(&self) -> Vec<VertexId> {
        self.graph.vertices().iter().copied().filter(|&v| self.is_free(v)).collect()
    }

    fn undeletable_vertices(&self) -> Vec<VertexId> {
        self.graph.vertices().iter().copied().filter(|&v| !self.is_free(v)).collect()
    }

    /// Marks free vertices (and everything they stand for) as not in the solution.
    pub fn exclude(&self, vertices: &VertexSet) -> Result<Self> {
        let mut out = self.clone();
        for &v in vertices {
            if !self.is_free(v) {
                return Err(Error::UnknownVertex(v));
            }
            out.excluded.extend(self.represents(v));
            out.excluded.insert(v);
            out.represents.remove(&v);
        }
        Ok(out)
    }

    /// Commits free vertices to the solution: each becomes a forced group and
    /// is deleted from the graph.
    pub fn commit(&self, vertices: &VertexSet) -> Result<Self> {
        let mut out = self.clone();
        for &v in vertices {
            if !self.is_free(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        out.force(vertices.iter().copied());
        Ok(out)
    }

    fn force<I: IntoIterator<Item = VertexId>>(&mut self, vertices: I) {
        let vertices: Vec<VertexId> = vertices.into_iter().collect();
        for &v in &vertices {
            let group = self.represents(v);
            self.represents.remove(&v);
            self.forced.push(group);
        }
        self.graph = self.graph.delete_vertices(vertices);
    }

    /// Original solutions obtained from a solution `picks` of the current graph.
    pub fn expand(&self, picks: &VertexSet) -> Vec<VertexSet> {
        let mut groups = self.forced.clone();
        groups.extend(picks.iter().map(|&v| self.represents(v)));
        transversals(&groups)
    }

    /// Exhaustively applies the basic rules. `None` means no solution avoids
    /// the undeletable vertices.
    pub fn apply_basic_rules(&self) -> Option<Self> {
        let mut inst = self.clone();
        loop {
            let free: Vec<VertexId> = inst.free_vertices();
            let fixed_part = inst.graph.delete_vertices(free.iter().copied());
            if !fixed_part.is_forest_in_every_color() {
                return None;
            }

            let forced = inst.unavoidable_vertices();
            if !forced.is_empty() {
                inst.force(forced);
                continue;
            }

            let pendant = pendant_edges(&inst.graph);
            if !pendant.is_empty() {
                inst.graph = inst.graph.without_edges(&pendant);
                continue;
            }

            let isolated: Vec<VertexId> = free
                .iter()
                .copied()
                .filter(|&v| !inst.graph.edges().iter().any(|e| e.touches(v)))
                .collect();
            if !isolated.is_empty() {
                for v in &isolated {
                    inst.represents.remove(v);
                }
                inst.graph = inst.graph.delete_vertices(isolated);
                continue;
            }
            return Some(inst);
        }
    }

    /// Free vertices that lie on a cycle whose other vertices are all
    /// undeletable: a self-loop, or two same-color edges into one component of
    /// the undeletable part in that color.
    fn unavoidable_vertices(&self) -> BTreeSet<VertexId> {
        let fixed = self.undeletable_vertices();
        let idx = |v: VertexId| fixed.binary_search(&v).ok();
        let mut out = BTreeSet::new();
        for v in self.free_vertices() {
            if self.graph.has_loop_at(v) {
                out.insert(v);
            }
        }
        for c in 1..=self.graph.colors() {
            let mut sets = DisjointSets::new(fixed.len());
            for e in self.graph.edges().iter().filter(|e| e.color == c) {
                if let (Some(a), Some(b)) = (idx(e.u), idx(e.v)) {
                    sets.union(a, b);
                }
            }
            let mut hits: BTreeMap<(VertexId, usize), usize> = BTreeMap::new();
            for e in self.graph.edges().iter().filter(|e| e.color == c && !e.is_loop()) {
                for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                    if let (true, Some(b)) = (self.is_free(x), idx(y)) {
                        *hits.entry((x, sets.find(b))).or_default() += 1;
                    }
                }
            }
            out.extend(hits.into_iter().filter(|&(_, n)| n >= 2).map(|((v, _), _)| v));
        }
        out
    }

    pub fn classify_vertices(&self) -> VertexClassification {
        let colors = self.graph.colors();
        let mut high = vec![VertexSet::new(); colors];
        let mut low = VertexSet::new();
        for v in self.free_vertices() {
            let mut is_low = true;
            for c in 1..=colors {
                if self.graph.degree_in(v, c) > 2 {
                    high[c - 1].insert(v);
                    is_low = false;
                }
            }
            if is_low {
                low.insert(v);
            }
        }
        let path_counts = (1..=colors).map(|c| self.paths_of_color(c).len()).collect();
        VertexClassification { high, low, path_counts }
    }

    pub fn maximal_monochromatic_paths(&self, color: Color) -> Result<Vec<MonochromaticPath>> {
        self.graph.check_color(color)?;
        Ok(self.paths_of_color(color))
    }

    fn paths_of_color(&self, color: Color) -> Vec<MonochromaticPath> {
        let g = &self.graph;
        let members: BTreeSet<VertexId> = self
            .free_vertices()
            .into_iter()
            .filter(|&v| {
                g.degree_in(v, color) == 2
                    && !g.edges().iter().any(|e| e.color == color && e.is_loop() && e.u == v)
            })
            .collect();
        let color_edges: Vec<usize> =
            (0..g.edge_count()).filter(|&i| g.edges()[i].color == color).collect();
        let incident = |v: VertexId| {
            color_edges.iter().copied().filter(move |&i| g.edges()[i].touches(v))
        };

        let mut seen = BTreeSet::new();
        let mut paths = Vec::new();
        for &start in &members {
            if seen.contains(&start) {
                continue;
            }
            let mut component = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for i in incident(x) {
                    let y = g.edges()[i].other(x);
                    if members.contains(&y) && component.insert(y) {
                        stack.push(y);
                    }
                }
            }
            seen.extend(component.iter().copied());

            let ends: Vec<VertexId> = component
                .iter()
                .copied()
                .filter(|&x| incident(x).any(|i| !component.contains(&g.edges()[i].other(x))))
                .collect();
            let cyclic = ends.is_empty();
            let first = ends.first().copied().unwrap_or(start);

            let mut vertices = vec![first];
            let mut in_walk = BTreeSet::from([first]);
            let mut cur = first;
            let mut came_by = None;
            loop {
                let step = incident(cur).find(|&i| {
                    let y = g.edges()[i].other(cur);
                    Some(i) != came_by && component.contains(&y) && !in_walk.contains(&y)
                });
                let Some(i) = step else { break };
                cur = g.edges()[i].other(cur);
                came_by = Some(i);
                vertices.push(cur);
                in_walk.insert(cur);
            }
            debug_assert_eq!(vertices.len(), component.len());
            paths.push(MonochromaticPath { color, vertices, cyclic });
        }
        paths
    }

    /// Merges interchangeable free vertices until none remain, rerunning the
    /// basic rules after every dissolution.
    pub fn apply_path_rules(&self) -> Option<Self> {
        let mut inst = self.apply_basic_rules()?;
        while let Some((keep, victim)) = inst.next_merge() {
            let graph = inst
                .graph
                .dissolve(victim)
                .expect("merge candidates have color degrees in {0, 2} and no self-loop");
            let mut merged = inst.represents(keep);
            merged.extend(inst.represents(victim));
            inst.represents.remove(&victim);
            inst.represents.insert(keep, merged);
            inst.graph = graph;
            inst = inst.apply_basic_rules()?;
        }
        Some(inst)
    }

    /// Basic rules followed by the path rules.
    pub fn reduce(&self) -> Option<Self> {
        self.apply_path_rules()
    }

    /// The lowest-id representative and the highest-id other member of the
    /// first group of interchangeable free vertices.
    fn next_merge(&self) -> Option<(VertexId, VertexId)> {
        let colors = self.graph.colors();
        let mut path_of: BTreeMap<(VertexId, Color), usize> = BTreeMap::new();
        for c in 1..=colors {
            for (i, p) in self.paths_of_color(c).into_iter().enumerate() {
                for v in p.vertices {
                    path_of.insert((v, c), i);
                }
            }
        }
        let mut groups: BTreeMap<Vec<Option<usize>>, Vec<VertexId>> = BTreeMap::new();
        'vertices: for v in self.free_vertices() {
            let mut signature = Vec::with_capacity(colors);
            for c in 1..=colors {
                match (self.graph.degree_in(v, c), path_of.get(&(v, c))) {
                    (0, _) => signature.push(None),
                    (2, Some(&p)) => signature.push(Some(p)),
                    _ => continue 'vertices,
                }
            }
            if signature.iter().all(Option::is_none) {
                continue;
            }
            groups.entry(signature).or_default().push(v);
        }
        groups
            .into_values()
            .find(|members| members.len() >= 2)
            .map(|members| (members[0], members[members.len() - 1]))
    }
}

/// Edges incident to a vertex of degree one in the edge's color.
fn pendant_edges(g: &EdgeColoredGraph) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &v in g.vertices() {
        for c in 1..=g.colors() {
            if g.degree_in(v, c) == 1 {
                if let Some(i) = g.incident(v).find(|&i| g.edges()[i].color == c) {
                    out.insert(i);
                }
            }
        }
    }
    out
}
