#![allow(dead_code)]

use dualfvs_core::{EdgeColoredGraph, Family, VertexId, VertexSet};
use proptest::prelude::*;

/// Vertices `1..=n` with `n >= max_n / 2`; each edge is `(a, b, color)` with endpoints drawn from
/// `1..=n`. Loops and parallel edges appear unless `simple` is set.
pub fn graph(max_n: u32, colors: usize, max_edges: usize, simple: bool) -> impl Strategy<Value = EdgeColoredGraph> {
    ((max_n / 2).max(1)..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((1..=n, 1..=n, 1..=colors), 0..=max_edges).prop_map(move |raw| {
            let mut edges: Vec<(VertexId, VertexId, usize)> = Vec::new();
            for (a, b, c) in raw {
                let e = (a.min(b), a.max(b), c);
                if simple && (a == b || edges.contains(&e)) {
                    continue;
                }
                edges.push(e);
            }
            EdgeColoredGraph::new(colors, 1..=n, edges).unwrap()
        })
    })
}

/// Random subset of the vertices of `g`, chosen by a bitmask.
pub fn subset_by_mask(g: &EdgeColoredGraph, mask: u64) -> VertexSet {
    g.vertices().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
}

pub fn disjoint_from(f: &Family, s: &VertexSet) -> Family {
    f.iter().filter(|x| x.is_disjoint(s)).cloned().collect()
}

pub fn relabel(g: &EdgeColoredGraph, map: impl Fn(VertexId) -> VertexId, color: impl Fn(usize) -> usize) -> EdgeColoredGraph {
    EdgeColoredGraph::new(
        g.colors(),
        g.vertices().iter().map(|&v| map(v)),
        g.edges().iter().map(|e| (map(e.u), map(e.v), color(e.color))),
    )
    .unwrap()
}
