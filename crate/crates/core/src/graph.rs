//! Edge-colored undirected multigraphs.
//!
//! Vertices carry stable positive labels that survive deletions, so every
//! solution and every bookkeeping map refers to the labels of the input graph.
//! Self-loops and parallel edges are allowed. A self-loop is a cycle of length
//! one and two parallel edges of the same color form a cycle of length two.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub type VertexId = u32;

/// Edge colors are numbered `1..=h`.
pub type Color = usize;

pub const BLUE: Color = 1;
pub const RED: Color = 2;

/// An undirected colored edge, stored with `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub color: Color,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId, color: Color) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Edge { u, v, color }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`. For a self-loop this is `x` itself.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Per-color degree of a vertex; entry `c - 1` belongs to color `c`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorDegree(pub Vec<usize>);

impl ColorDegree {
    pub fn get(&self, color: Color) -> usize {
        self.0[color - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }
}

/// A monochromatic cycle. `edges[i]` indexes into [`EdgeColoredGraph::edges`]
/// and joins `vertices[i]` with `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub color: Color,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

impl Cycle {
    /// Checks the cycle against the edge multiset of `g`: distinct vertices,
    /// distinct edges, every edge of the right color joining consecutive vertices.
    pub fn is_valid_in(&self, g: &EdgeColoredGraph) -> bool {
        let len = self.vertices.len();
        if len == 0 || self.edges.len() != len {
            return false;
        }
        let distinct_vertices: BTreeSet<_> = self.vertices.iter().collect();
        let distinct_edges: BTreeSet<_> = self.edges.iter().collect();
        if distinct_vertices.len() != len || distinct_edges.len() != len {
            return false;
        }
        self.edges.iter().enumerate().all(|(i, &e)| {
            let Some(edge) = g.edges.get(e) else {
                return false;
            };
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % len];
            edge.color == self.color && *edge == Edge::new(a, b, self.color)
        })
    }
}

/// Union-find over dense indices.
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoredGraph {
    colors: usize,
    vertices: BTreeSet<VertexId>,
    // kept sorted so that equal multigraphs compare equal
    edges: Vec<Edge>,
}

impl EdgeColoredGraph {
    /// An empty graph with `colors` edge colors.
    pub fn with_colors(colors: usize) -> Result<Self> {
        if colors == 0 {
            return Err(Error::NoColors);
        }
        Ok(EdgeColoredGraph { colors, vertices: BTreeSet::new(), edges: Vec::new() })
    }

    pub fn new<V, E>(colors: usize, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId, Color)>,
    {
        let mut g = Self::with_colors(colors)?;
        g.vertices.extend(vertices);
        for (a, b, c) in edges {
            g.check_color(c)?;
            for x in [a, b] {
                if !g.vertices.contains(&x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            g.edges.push(Edge::new(a, b, c));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    pub fn check_color(&self, color: Color) -> Result<()> {
        if (1..=self.colors).contains(&color) {
            Ok(())
        } else {
            Err(Error::InvalidColor { color, colors: self.colors })
        }
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn color_degree(&self, v: VertexId) -> Result<ColorDegree> {
        self.check_vertex(v)?;
        let mut deg = vec![0; self.colors];
        for e in self.edges.iter().filter(|e| e.touches(v)) {
            deg[e.color - 1] += if e.is_loop() { 2 } else { 1 };
        }
        Ok(ColorDegree(deg))
    }

    /// Degree of `v` in color `color`, self-loops counted twice. No validation.
    pub(crate) fn degree_in(&self, v: VertexId, color: Color) -> usize {
        self.edges
            .iter()
            .filter(|e| e.color == color && e.touches(v))
            .map(|e| if e.is_loop() { 2 } else { 1 })
            .sum()
    }

    pub(crate) fn has_loop_at(&self, v: VertexId) -> bool {
        self.edges.iter().any(|e| e.is_loop() && e.u == v)
    }

    /// Indices of edges incident to `v`; a self-loop is listed once.
    pub(crate) fn incident(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.touches(v)).map(|(i, _)| i)
    }

    pub(crate) fn dense_index(&self, v: VertexId) -> Option<usize> {
        // BTreeSet has no rank query; graphs here are small
        self.vertices.iter().position(|&x| x == v)
    }

    fn dense_ids(&self) -> Vec<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn is_acyclic(&self, color: Color) -> Result<bool> {
        self.check_color(color)?;
        Ok(self.color_is_acyclic(color))
    }

    fn color_is_acyclic(&self, color: Color) -> bool {
        let ids = self.dense_ids();
        let idx = |v: VertexId| ids.binary_search(&v).expect("edge endpoint is live");
        let mut sets = DisjointSets::new(ids.len());
        self.edges
            .iter()
            .filter(|e| e.color == color)
            .all(|e| !e.is_loop() && sets.union(idx(e.u), idx(e.v)))
    }

    /// True when every color class is acyclic.
    pub fn is_forest_in_every_color(&self) -> bool {
        (1..=self.colors).all(|c| self.color_is_acyclic(c))
    }

    /// True when deleting `set` leaves every color class acyclic.
    pub fn hits_all_monochromatic_cycles(&self, set: &BTreeSet<VertexId>) -> bool {
        let ids: Vec<VertexId> = self.vertices.difference(set).copied().collect();
        let idx = |v: VertexId| ids.binary_search(&v).ok();
        (1..=self.colors).all(|c| {
            let mut sets = DisjointSets::new(ids.len());
            self.edges.iter().filter(|e| e.color == c).all(|e| match (idx(e.u), idx(e.v)) {
                (Some(a), Some(b)) => a != b && sets.union(a, b),
                _ => true,
            })
        })
    }

    pub fn find_monochromatic_cycle(&self, color: Color) -> Result<Option<Cycle>> {
        self.check_color(color)?;
        let ids = self.dense_ids();
        let idx = |v: VertexId| ids.binary_search(&v).expect("edge endpoint is live");
        let mut sets = DisjointSets::new(ids.len());
        // spanning forest built so far: (neighbor, edge index)
        let mut forest: Vec<Vec<(usize, usize)>> = vec![Vec::new(); ids.len()];
        for (ei, e) in self.edges.iter().enumerate().filter(|(_, e)| e.color == color) {
            let (a, b) = (idx(e.u), idx(e.v));
            if a == b {
                return Ok(Some(Cycle { color, vertices: vec![e.u], edges: vec![ei] }));
            }
            if sets.union(a, b) {
                forest[a].push((b, ei));
                forest[b].push((a, ei));
                continue;
            }
            // tree path from a to b closes the cycle with edge ei
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; ids.len()];
            let mut seen = vec![false; ids.len()];
            let mut queue = VecDeque::from([a]);
            seen[a] = true;
            while let Some(x) = queue.pop_front() {
                if x == b {
                    break;
                }
                for &(y, via) in &forest[x] {
                    if !seen[y] {
                        seen[y] = true;
                        prev[y] = Some((x, via));
                        queue.push_back(y);
                    }
                }
            }
            let mut vertices = vec![ids[b]];
            let mut edges = Vec::new();
            let mut cur = b;
            while let Some((p, via)) = prev[cur] {
                edges.push(via);
                vertices.push(ids[p]);
                cur = p;
            }
            // vertices run b .. a; the closing edge joins a back to b
            edges.push(ei);
            return Ok(Some(normalize_cycle(Cycle { color, vertices, edges })));
        }
        Ok(None)
    }

    /// Removes the listed vertices and every edge touching them. Ids that are
    /// not live are ignored.
    pub fn delete_vertices<I>(&self, set: I) -> Self
    where
        I: IntoIterator<Item = VertexId>,
    {
        let removed: BTreeSet<VertexId> = set.into_iter().collect();
        if removed.is_empty() {
            return self.clone();
        }
        EdgeColoredGraph {
            colors: self.colors,
            vertices: self.vertices.difference(&removed).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| !removed.contains(&e.u) && !removed.contains(&e.v))
                .copied()
                .collect(),
        }
    }

    /// Removes the edges with the given indices, keeping all vertices.
    pub(crate) fn without_edges(&self, drop: &BTreeSet<usize>) -> Self {
        EdgeColoredGraph {
            colors: self.colors,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, e)| *e)
                .collect(),
        }
    }

    /// The subgraph of one color class as a single-color graph on the same vertices.
    pub fn color_class(&self, color: Color) -> Result<Self> {
        self.check_color(color)?;
        Ok(EdgeColoredGraph {
            colors: 1,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.color == color)
                .map(|e| Edge { color: 1, ..*e })
                .collect(),
        })
    }

    /// Removes `v` and, in every color where `v` has degree two, joins its two
    /// neighbors by a new edge of that color. The neighbors may coincide (the new
    /// edge is then a self-loop) or already be adjacent (a parallel edge).
    ///
    /// Every color degree of `v` must be 0 or 2 and `v` must not carry a self-loop.
    pub fn dissolve(&self, v: VertexId) -> Result<Self> {
        self.check_vertex(v)?;
        if self.has_loop_at(v) {
            return Err(Error::NotDissolvable { vertex: v, reason: "vertex carries a self-loop" });
        }
        let mut joins = Vec::new();
        for c in 1..=self.colors {
            let ends: Vec<VertexId> = self
                .edges
                .iter()
                .filter(|e| e.color == c && e.touches(v))
                .map(|e| e.other(v))
                .collect();
            match ends.len() {
                0 => {}
                2 => joins.push(Edge::new(ends[0], ends[1], c)),
                _ => {
                    return Err(Error::NotDissolvable {
                        vertex: v,
                        reason: "a color degree is neither 0 nor 2",
                    })
                }
            }
        }
        let mut out = self.delete_vertices([v]);
        out.edges.extend(joins);
        out.edges.sort_unstable();
        Ok(out)
    }

    /// Dissolves a vertex of degree two in `color` and degree zero elsewhere.
    pub fn dissolve_degree2(&self, v: VertexId, color: Color) -> Result<Self> {
        self.check_color(color)?;
        let deg = self.color_degree(v)?;
        let ok = (1..=self.colors).all(|c| deg.get(c) == if c == color { 2 } else { 0 });
        if !ok {
            return Err(Error::NotDissolvable {
                vertex: v,
                reason: "vertex must have degree 2 in the given color and 0 elsewhere",
            });
        }
        self.dissolve(v)
    }
}

/// Rotates the cycle to start at its smallest vertex and orients it towards the
/// smaller of the two neighbors, so equal cycles print equally.
fn normalize_cycle(mut cycle: Cycle) -> Cycle {
    let len = cycle.vertices.len();
    let start = (0..len).min_by_key(|&i| cycle.vertices[i]).unwrap_or(0);
    cycle.vertices.rotate_left(start);
    cycle.edges.rotate_left(start);
    if len > 2 && cycle.vertices[len - 1] < cycle.vertices[1] {
        // walk the other way round: v0, v_{n-1}, ..., v1
        cycle.vertices[1..].reverse();
        cycle.edges.reverse();
    }
    cycle
}

/// A directed graph whose arcs become alternating blue/red paths in
/// [`Digraph::to_alternating`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertices: BTreeSet<VertexId>,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl Digraph {
    pub fn new<V, A>(vertices: V, arcs: A) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        A: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (a, b) in arcs {
            for x in [a, b] {
                if !vertices.contains(&x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            set.insert((a, b));
        }
        Ok(Digraph { vertices, arcs: set })
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.arcs
    }

    /// Replaces every arc `u -> v` by a blue edge `u x` and a red edge `x v`
    /// through a fresh midpoint `x`. Midpoints are numbered after the largest
    /// vertex id, in arc order. Returns the graph and the midpoint list.
    pub fn to_alternating(&self) -> (EdgeColoredGraph, Vec<VertexId>) {
        let first = self.vertices.last().copied().unwrap_or(0) + 1;
        let mut vertices = self.vertices.clone();
        let mut edges = Vec::with_capacity(2 * self.arcs.len());
        let mut midpoints = Vec::with_capacity(self.arcs.len());
        for (&(u, v), x) in self.arcs.iter().zip(first..) {
            vertices.insert(x);
            midpoints.push(x);
            edges.push(Edge::new(u, x, BLUE));
            edges.push(Edge::new(x, v, RED));
        }
        edges.sort_unstable();
        (EdgeColoredGraph { colors: 2, vertices, edges }, midpoints)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> EdgeColoredGraph {
        EdgeColoredGraph::new(
            2,
            1..=5,
            [(1, 2, BLUE), (2, 3, BLUE), (1, 3, BLUE), (3, 4, RED), (4, 5, RED), (3, 5, RED)],
        )
        .unwrap()
    }

    fn blue(n: VertexId, edges: &[(VertexId, VertexId)]) -> EdgeColoredGraph {
        EdgeColoredGraph::new(2, 1..=n, edges.iter().map(|&(a, b)| (a, b, BLUE))).unwrap()
    }

    #[test]
    fn color_degrees() {
        let g = EdgeColoredGraph::new(2, [7], []).unwrap();
        assert_eq!(g.color_degree(7).unwrap(), ColorDegree(vec![0, 0]));
        let tri = blue(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(tri.color_degree(2).unwrap(), ColorDegree(vec![2, 0]));
        assert_eq!(two_triangles().color_degree(3).unwrap(), ColorDegree(vec![2, 2]));
        assert_eq!(tri.color_degree(9), Err(Error::UnknownVertex(9)));
        let looped = blue(1, &[(1, 1)]);
        assert_eq!(looped.color_degree(1).unwrap().get(BLUE), 2);
    }

    #[test]
    fn acyclicity_and_cycles() {
        let tri = blue(3, &[(1, 2), (2, 3), (1, 3)]);
        assert!(!tri.is_acyclic(BLUE).unwrap());
        assert!(tri.is_acyclic(RED).unwrap());
        let cycle = tri.find_monochromatic_cycle(BLUE).unwrap().unwrap();
        assert_eq!(cycle.vertices, vec![1, 2, 3]);
        assert!(cycle.is_valid_in(&tri));

        let path = blue(3, &[(1, 2), (2, 3)]);
        assert!(path.is_acyclic(BLUE).unwrap());
        assert_eq!(path.find_monochromatic_cycle(BLUE).unwrap(), None);

        let looped = blue(1, &[(1, 1)]);
        assert!(!looped.is_acyclic(BLUE).unwrap());
        let c = looped.find_monochromatic_cycle(BLUE).unwrap().unwrap();
        assert_eq!(c.vertices, vec![1]);
        assert!(c.is_valid_in(&looped));

        let parallel = blue(2, &[(1, 2), (1, 2)]);
        let c = parallel.find_monochromatic_cycle(BLUE).unwrap().unwrap();
        assert_eq!(c.vertices, vec![1, 2]);
        assert_eq!(c.edges.len(), 2);
        assert_ne!(c.edges[0], c.edges[1]);
        assert!(c.is_valid_in(&parallel));

        assert_eq!(tri.is_acyclic(3), Err(Error::InvalidColor { color: 3, colors: 2 }));
        assert!(tri.find_monochromatic_cycle(0).is_err());
    }

    #[test]
    fn deletion() {
        let g = two_triangles();
        let d = g.delete_vertices([3]);
        assert!(d.is_acyclic(BLUE).unwrap() && d.is_acyclic(RED).unwrap());
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(g.delete_vertices([]), g);
        let empty = g.delete_vertices(1..=5);
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);
        // absent ids are ignored
        assert_eq!(g.delete_vertices([42]), g);
    }

    #[test]
    fn dissolution() {
        // a=1, v=2, b=3
        let path = blue(3, &[(1, 2), (2, 3)]);
        let d = path.dissolve_degree2(2, BLUE).unwrap();
        assert_eq!(d.edges(), &[Edge::new(1, 3, BLUE)]);

        let tri = blue(3, &[(1, 2), (2, 3), (1, 3)]);
        let d = tri.dissolve_degree2(2, BLUE).unwrap();
        assert_eq!(d.edges(), &[Edge::new(1, 3, BLUE), Edge::new(1, 3, BLUE)]);
        assert!(!d.is_acyclic(BLUE).unwrap());

        let pair = blue(2, &[(1, 2), (1, 2)]);
        let d = pair.dissolve_degree2(2, BLUE).unwrap();
        assert_eq!(d.edges(), &[Edge::new(1, 1, BLUE)]);
        assert!(!d.is_acyclic(BLUE).unwrap());

        let g = two_triangles();
        assert!(matches!(g.dissolve_degree2(3, BLUE), Err(Error::NotDissolvable { .. })));
        let looped = blue(2, &[(1, 1), (1, 2)]);
        assert!(looped.dissolve(1).is_err());
    }

    #[test]
    fn alternating_conversion() {
        let d = Digraph::new([1, 2], [(1, 2), (2, 1)]).unwrap();
        let (g, mids) = d.to_alternating();
        assert_eq!(mids, vec![3, 4]);
        // 1 -blue- 3 -red- 2 -blue- 4 -red- 1
        assert_eq!(
            g.edges(),
            &[Edge::new(1, 3, BLUE), Edge::new(1, 4, RED), Edge::new(2, 3, RED), Edge::new(2, 4, BLUE)]
        );
        for m in mids {
            assert_eq!(g.color_degree(m).unwrap(), ColorDegree(vec![1, 1]));
        }

        let single = Digraph::new([1, 2], [(1, 2)]).unwrap();
        let (g, _) = single.to_alternating();
        assert_eq!(g.edges(), &[Edge::new(1, 3, BLUE), Edge::new(2, 3, RED)]);

        let (g, mids) = Digraph::new([1, 2, 3], []).unwrap().to_alternating();
        assert!(mids.is_empty());
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);

        assert_eq!(Digraph::new([1], [(1, 2)]), Err(Error::UnknownVertex(2)));
    }

    #[test]
    fn construction_validates() {
        assert_eq!(EdgeColoredGraph::with_colors(0), Err(Error::NoColors));
        assert_eq!(
            EdgeColoredGraph::new(2, 1..=3, [(1, 4, 1)]),
            Err(Error::UnknownVertex(4))
        );
        assert_eq!(
            EdgeColoredGraph::new(2, 1..=3, [(1, 2, 3)]),
            Err(Error::InvalidColor { color: 3, colors: 2 })
        );
    }
}
