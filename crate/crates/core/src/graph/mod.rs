//! Finite simple graphs and the graph-theoretic side of the library:
//! s-arcs, distance transitivity, quotients, normal covers, reduction to
//! quasiprimitive quotients, and automorphism search.

mod arcs;
mod quotient;
mod search;

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub use arcs::{
    count_s_arcs, is_distance_transitive, is_invariant, is_s_arc_transitive, max_s_arc_transitivity,
    s_arcs, SArcs,
};
pub use quotient::{
    distance_two_graph, is_normal_cover, normal_quotient, quotient_graph, reduce_to_quasiprimitive,
    CandidateInfo, QuotientNotes, QuotientResult, ReductionStep, ReductionTerminal, ReductionTrace,
};
pub use search::{are_isomorphic, automorphism_group};

/// An undirected simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    /// Sorted pairs `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{}, {}}} has an endpoint outside 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", u + 1)));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge {{{}, {}}}",
                w[0].0 + 1,
                w[0].1 + 1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`Graph::new`] but silently drops duplicates and loops.
    pub(crate) fn new_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn edgeless(n: usize) -> Graph {
        Self::from_sorted(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The common valency, if the graph is regular.
    pub fn regular_valency(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, |a| a.len());
        self.adj.iter().all(|a| a.len() == k).then_some(k)
    }

    /// Breadth-first distances from `v`; `None` when unreachable.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(|d| d.is_some())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &y in &self.adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                diam = diam.max(d?);
            }
        }
        Some(diam)
    }

    /// Induced subgraph on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new_lossy(vertices.len(), edges)
    }

    /// Parses `graph N M` followed by `M` lines `u v` (1-based); `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `graph N M` header".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "graph" {
            return Err(Error::Parse(format!("bad header {header:?}")));
        }
        let n: usize = parts[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {:?}", parts[1])))?;
        let m: usize = parts[2]
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge count {:?}", parts[2])))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let nums: Vec<&str> = line.split_whitespace().collect();
            if nums.len() != 2 {
                return Err(Error::Parse(format!("bad edge line {line:?}")));
            }
            let mut ends = [0usize; 2];
            for (slot, tok) in ends.iter_mut().zip(&nums) {
                let x: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex {tok:?}")))?;
                if x == 0 || x > n {
                    return Err(Error::Parse(format!("vertex {x} out of range 1..={n}")));
                }
                *slot = x - 1;
            }
            edges.push((ends[0], ends[1]));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    /// Inverse of [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let p = catalog::petersen();
        assert_eq!(Graph::parse(&p.to_text()).unwrap(), p);
        let g = Graph::parse("# triangle\ngraph 3 3\n1 2\n2 3 # last two\n3 1\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(Graph::parse("graph 3 2\n1 2\n").is_err());
        assert!(Graph::parse("graph 3 1\n1 4\n").is_err());
    }

    #[test]
    fn invariants_of_catalog_graphs() {
        let p = catalog::petersen();
        assert_eq!((p.vertex_count(), p.edge_count(), p.regular_valency()), (10, 15, Some(3)));
        assert_eq!(p.girth(), Some(5));
        assert_eq!(p.diameter(), Some(2));
        let h = catalog::heawood();
        assert_eq!((h.vertex_count(), h.girth()), (14, Some(6)));
        assert!(h.is_bipartite());
        assert!(!p.is_bipartite());
        assert_eq!(catalog::cycle(6).girth(), Some(6));
        assert_eq!(Graph::edgeless(4).girth(), None);
        assert!(!Graph::edgeless(3).is_connected());
    }
}
