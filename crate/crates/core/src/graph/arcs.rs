use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use super::Graph;
use crate::error::{Error, Result};
use crate::group::Group;

/// Every generator maps edges to edges.
pub fn is_invariant(graph: &Graph, group: &Group) -> Result<bool> {
    if group.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(group.degree(), graph.vertex_count()));
    }
    Ok(group.generators().iter().all(|g| {
        graph
            .edges()
            .iter()
            .all(|&(u, v)| graph.has_edge(g.apply(u), g.apply(v)))
    }))
}

pub(crate) fn require_invariant(graph: &Graph, group: &Group) -> Result<()> {
    if is_invariant(graph, group)? {
        Ok(())
    } else {
        Err(Error::NotInvariant)
    }
}

/// Number of s-arcs, by backtracking.
pub fn count_s_arcs(graph: &Graph, s: usize) -> u64 {
    fn rec(g: &Graph, prev: usize, cur: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        g.neighbors(cur)
            .iter()
            .filter(|&&w| w != prev)
            .map(|&w| rec(g, cur, w, left - 1))
            .sum()
    }
    if s == 0 {
        return graph.vertex_count() as u64;
    }
    (0..graph.vertex_count())
        .map(|v| {
            graph
                .neighbors(v)
                .iter()
                .map(|&w| rec(graph, v, w, s - 1))
                .sum::<u64>()
        })
        .sum()
}

/// Lexicographic iterator over the s-arcs of a graph.
pub struct SArcs<'a> {
    graph: &'a Graph,
    s: usize,
    start: usize,
    path: Vec<usize>,
    cursor: Vec<usize>,
}

pub fn s_arcs(graph: &Graph, s: usize) -> SArcs<'_> {
    SArcs {
        graph,
        s,
        start: 0,
        path: Vec::with_capacity(s + 1),
        cursor: Vec::with_capacity(s + 1),
    }
}

impl Iterator for SArcs<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            let k = self.path.len();
            if k == self.s + 1 {
                let out = self.path.clone();
                self.path.pop();
                return Some(out);
            }
            if k == 0 {
                if self.start >= self.graph.vertex_count() {
                    return None;
                }
                self.path.push(self.start);
                self.start += 1;
                if self.s > 0 {
                    self.cursor.push(0);
                }
                continue;
            }
            let nb = self.graph.neighbors(self.path[k - 1]);
            let back = (k >= 2).then(|| self.path[k - 2]);
            let c = &mut self.cursor[k - 1];
            while *c < nb.len() && Some(nb[*c]) == back {
                *c += 1;
            }
            if *c < nb.len() {
                let w = nb[*c];
                *c += 1;
                self.path.push(w);
                if self.path.len() < self.s + 1 {
                    self.cursor.push(0);
                }
            } else {
                self.path.pop();
                self.cursor.pop();
            }
        }
    }
}

/// Size of the orbit of `tuple` under `group`, or a cap error.
fn tuple_orbit_size(group: &Group, tuple: &[usize], cap: usize) -> Result<u64> {
    let start: Vec<u32> = tuple.iter().map(|&x| x as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for g in group.generators() {
            let img: Vec<u32> = t.iter().map(|&x| g.apply(x as usize) as u32).collect();
            if !seen.contains(&img) {
                if seen.len() >= cap {
                    return Err(Error::TupleCap(cap));
                }
                seen.insert(img.clone());
                queue.push_back(img);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// Whether `group` is transitive on the s-arcs of `graph`.
pub fn is_s_arc_transitive(graph: &Graph, group: &Group, s: usize, tuple_cap: usize) -> Result<bool> {
    require_invariant(graph, group)?;
    let total = count_s_arcs(graph, s);
    if total == 0 {
        return Err(Error::Vacuous(s));
    }
    // an orbit is never longer than the group order
    if group.order() < BigUint::from(total) {
        return Ok(false);
    }
    let first = s_arcs(graph, s).next().unwrap();
    Ok(tuple_orbit_size(group, &first, tuple_cap)? == total)
}

/// Largest `s ≤ limit` such that `group` is t-arc-transitive for every
/// `t ≤ s`; `None` when it is not even vertex-transitive. Stops early when
/// the graph has no longer arcs.
pub fn max_s_arc_transitivity(
    graph: &Graph,
    group: &Group,
    limit: usize,
    tuple_cap: usize,
) -> Result<Option<usize>> {
    let mut best = None;
    for s in 0..=limit {
        match is_s_arc_transitive(graph, group, s, tuple_cap) {
            Ok(true) => best = Some(s),
            Ok(false) | Err(Error::Vacuous(_)) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(best)
}

/// Transitivity on ordered pairs at each occurring distance.
pub fn is_distance_transitive(graph: &Graph, group: &Group, tuple_cap: usize) -> Result<bool> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    require_invariant(graph, group)?;
    let n = graph.vertex_count();
    let mut counts: Vec<u64> = Vec::new();
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for (v, d) in graph.distances_from(u).into_iter().enumerate() {
            let d = d.unwrap();
            if d >= counts.len() {
                counts.resize(d + 1, 0);
                reps.resize(d + 1, (usize::MAX, usize::MAX));
            }
            if counts[d] == 0 {
                reps[d] = (u, v);
            }
            counts[d] += 1;
        }
    }
    for (d, &(u, v)) in reps.iter().enumerate() {
        if tuple_orbit_size(group, &[u, v], tuple_cap)? != counts[d] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::Graph;

    const CAP: usize = 10_000_000;

    #[test]
    fn arc_counts() {
        let p = catalog::petersen();
        assert_eq!(count_s_arcs(&p, 0), 10);
        assert_eq!(count_s_arcs(&p, 2), 60);
        let c6 = catalog::cycle(6);
        assert_eq!(count_s_arcs(&c6, 3), 12);
        assert_eq!(count_s_arcs(&Graph::edgeless(3), 1), 0);
        for (g, s) in [(&p, 0), (&p, 3), (&c6, 4), (&catalog::complete(4), 2)] {
            let all: Vec<Vec<usize>> = s_arcs(g, s).collect();
            assert_eq!(all.len() as u64, count_s_arcs(g, s));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for a in &all {
                assert!(a.windows(2).all(|w| g.has_edge(w[0], w[1])));
                assert!(a.windows(3).all(|w| w[0] != w[2]));
            }
        }
    }

    #[test]
    fn invariance() {
        let c5 = catalog::cycle(5);
        let swap = Group::from_cycles(5, &["(1 2)"]).unwrap();
        assert!(!is_invariant(&c5, &swap).unwrap());
        assert!(is_invariant(&c5, &Group::trivial(5)).unwrap());
        assert!(is_invariant(&c5, &catalog::dihedral(5)).unwrap());
        assert!(is_invariant(&c5, &Group::trivial(4)).is_err());
    }

    #[test]
    fn arc_transitivity() {
        let k4 = catalog::complete(4);
        let s4 = catalog::symmetric(4);
        assert!(is_s_arc_transitive(&k4, &s4, 2, CAP).unwrap());
        assert!(matches!(
            is_s_arc_transitive(&Graph::edgeless(3), &Group::trivial(3), 1, CAP),
            Err(Error::Vacuous(1))
        ));
        let c7 = catalog::cycle(7);
        assert_eq!(
            max_s_arc_transitivity(&c7, &catalog::dihedral(7), 12, CAP).unwrap(),
            Some(12)
        );
        assert_eq!(
            max_s_arc_transitivity(&c7, &catalog::cyclic(7), 3, CAP).unwrap(),
            Some(0)
        );
        assert!(matches!(
            is_s_arc_transitive(&c7, &Group::trivial(7), 1, 3),
            Err(Error::TupleCap(3)) | Ok(false)
        ));
    }

    #[test]
    fn distance_transitivity() {
        for n in 3..9 {
            assert!(is_distance_transitive(&catalog::cycle(n), &catalog::dihedral(n), CAP).unwrap());
        }
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_distance_transitive(&path, &Group::trivial(3), CAP).unwrap());
        assert!(matches!(
            is_distance_transitive(&Graph::edgeless(2), &Group::trivial(2), CAP),
            Err(Error::Disconnected)
        ));
    }
}
