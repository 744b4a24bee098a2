//! Factor-two approximation of a minimum feedback vertex set of one color
//! class, by local ratio with weights `degree - 1` followed by reverse
//! deletion (Becker and Geiger style).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::family::VertexSet;
use crate::graph::{Color, EdgeColoredGraph, VertexId};
use crate::Result;

const EPS: f64 = 1e-9;

/// A feedback vertex set of color class `color` of size at most twice the minimum.
pub fn fvs_2approx(g: &EdgeColoredGraph, color: Color) -> Result<VertexSet> {
    let class = g.color_class(color)?;
    let mut work = class.clone();
    let mut weight: BTreeMap<VertexId, f64> = work.vertices().iter().map(|&v| (v, 1.0)).collect();
    let mut picked: Vec<VertexId> = Vec::new();

    loop {
        loop {
            let low: Vec<VertexId> =
                work.vertices().iter().copied().filter(|&v| work.degree_in(v, 1) <= 1).collect();
            if low.is_empty() {
                break;
            }
            work = work.delete_vertices(low);
        }
        if work.vertex_count() == 0 {
            break;
        }

        let degrees: Vec<(VertexId, f64)> =
            work.vertices().iter().map(|&v| (v, (work.degree_in(v, 1) - 1) as f64)).collect();
        let (argmin, gamma) = degrees
            .iter()
            .map(|&(v, d)| (v, weight[&v] / d))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("graph is nonempty");
        let mut zero = Vec::new();
        for &(v, d) in &degrees {
            let w = weight.get_mut(&v).expect("live vertex has a weight");
            *w -= gamma * d;
            if v == argmin || *w <= EPS {
                *w = 0.0;
                zero.push(v);
            }
        }
        picked.extend(zero.iter().copied());
        work = work.delete_vertices(zero);
    }

    let mut solution: VertexSet = picked.iter().copied().collect();
    for &v in picked.iter().rev() {
        solution.remove(&v);
        if !class.hits_all_monochromatic_cycles(&solution) {
            solution.insert(v);
        }
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BLUE, RED};

    fn blue(n: VertexId, edges: &[(VertexId, VertexId)]) -> EdgeColoredGraph {
        EdgeColoredGraph::new(2, 1..=n, edges.iter().map(|&(a, b)| (a, b, BLUE))).unwrap()
    }

    #[test]
    fn small_cases() {
        let tri = blue(3, &[(1, 2), (2, 3), (1, 3)]);
        let s = fvs_2approx(&tri, BLUE).unwrap();
        assert!(!s.is_empty() && s.len() <= 2);
        assert!(tri.color_class(BLUE).unwrap().hits_all_monochromatic_cycles(&s));

        let forest = blue(4, &[(1, 2), (2, 3), (2, 4)]);
        assert!(fvs_2approx(&forest, BLUE).unwrap().is_empty());
        assert!(fvs_2approx(&tri, RED).unwrap().is_empty());

        let two = blue(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
        let s = fvs_2approx(&two, BLUE).unwrap();
        assert!(s.len() >= 2 && s.len() <= 4);
    }

    #[test]
    fn multigraph_inputs() {
        let g = blue(3, &[(1, 1), (2, 3), (2, 3)]);
        let s = fvs_2approx(&g, BLUE).unwrap();
        assert!(s.contains(&1));
        assert_eq!(s.len(), 2);
    }
}
