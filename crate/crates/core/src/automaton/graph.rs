use std::collections::BTreeMap;

use petgraph::algo::kosaraju_scc;
use petgraph::graphmap::DiGraphMap;

/// A directed multigraph on `0..n` with edge multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    n: usize,
    edges: BTreeMap<(usize, usize), usize>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Multigraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        *self.edges.entry((u, v)).or_insert(0) += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges.get(&(u, v)).copied().unwrap_or(0)
    }

    /// Distinct `(u, v, multiplicity)` triples in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|((_, t), _)| *t == v)
            .map(|(_, m)| m)
            .sum()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.edges.range((u, 0)..(u + 1, 0)).map(|(_, m)| m).sum()
    }

    /// Distinct successors of `u`.
    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((u, 0)..(u + 1, 0)).map(|(&(_, v), _)| v)
    }

    /// Distinct predecessors of `v`.
    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .keys()
            .filter(move |&&(_, t)| t == v)
            .map(|&(s, _)| s)
    }

    fn to_petgraph(&self) -> DiGraphMap<usize, usize> {
        let mut g = DiGraphMap::with_capacity(self.n, self.edges.len());
        for v in 0..self.n {
            g.add_node(v);
        }
        for (&(u, v), &m) in &self.edges {
            g.add_edge(u, v, m);
        }
        g
    }

    /// Strongly connected components, each sorted; components listed in
    /// order of their smallest vertex.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> = kosaraju_scc(&self.to_petgraph())
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        comps.sort_unstable();
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n <= 1 || self.strongly_connected_components().len() == 1
    }

    pub fn is_weakly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut undirected = vec![Vec::new(); self.n];
        for &(u, v) in self.edges.keys() {
            undirected[u].push(v);
            undirected[v].push(u);
        }
        while let Some(u) = stack.pop() {
            for &v in &undirected[u] {
                if !std::mem::replace(&mut seen[v], true) {
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Vertices reachable from `sources` (inclusive) along edges whose
    /// endpoints are both outside `blocked`.
    pub fn reachable_avoiding(&self, sources: &[usize], blocked: &[usize], forward: bool) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.edges.keys() {
            if forward {
                adj[u].push(v);
            } else {
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; self.n];
        let mut stack = Vec::new();
        for &s in sources {
            if !blocked.contains(&s) && !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !blocked.contains(&v) && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
