use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

/// A simple undirected graph on nodes `0..n`, used for the domination step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl AdjacencyGraph {
    pub fn new(n: usize) -> Self {
        AdjacencyGraph { adj: vec![BTreeSet::new(); n] }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Adds the edge `a b`; loops and repeated edges are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Smallest `d` such that every subgraph has a node of degree at most `d`,
    /// by repeatedly removing a node of minimum remaining degree.
    pub fn degeneracy(&self) -> usize {
        let n = self.adj.len();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut best = 0;
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| deg[v]).expect("a node remains");
            best = best.max(deg[v]);
            removed[v] = true;
            for u in self.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.adj.len();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let sx = side[x].expect("visited");
                for y in self.neighbors(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            stack.push(y);
                        }
                        Some(sy) if sy == sx => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Every node is in `set` or adjacent to a node of `set`.
    pub fn is_dominating(&self, set: &[usize]) -> bool {
        let mut dominated = vec![false; self.adj.len()];
        for &v in set {
            dominated[v] = true;
            for u in self.neighbors(v) {
                dominated[u] = true;
            }
        }
        dominated.into_iter().all(|d| d)
    }
}
