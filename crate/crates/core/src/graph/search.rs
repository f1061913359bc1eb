//! Backtracking search for isomorphisms, pruned by colour refinement.
//!
//! A colouring is a vector of colour indices. Refinement replaces each
//! colour by the rank of (colour, sorted neighbour colours) until the number
//! of colours stops growing, and records a hash of each round's signature
//! multiset. Two colourings whose traces differ cannot be matched by any
//! isomorphism; equal traces only license further search, and every mapping
//! returned is checked edge by edge.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;

use super::Graph;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

fn refine(graph: &Graph, colors: &mut Vec<u32>) -> Vec<u64> {
    let mut trace = Vec::new();
    let mut count = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
    loop {
        let sigs: Vec<Vec<u32>> = (0..graph.vertex_count())
            .map(|v| {
                let mut s: Vec<u32> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                s.insert(0, colors[v]);
                s
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort_unstable();
        let mut hasher = DefaultHasher::new();
        distinct.hash(&mut hasher);
        trace.push(hasher.finish());
        distinct.dedup();
        for (v, s) in sigs.iter().enumerate() {
            colors[v] = distinct.binary_search(s).unwrap() as u32;
        }
        if distinct.len() == count {
            return trace;
        }
        count = distinct.len();
    }
}

fn individualize(colors: &mut [u32], v: usize) {
    let fresh = colors.iter().copied().max().unwrap() + 1;
    colors[v] = fresh;
}

/// The first colour (by index) held by more than one vertex.
fn target_cell(colors: &[u32]) -> Option<u32> {
    let mut size = vec![0usize; colors.len() + 1];
    for &c in colors {
        size[c as usize] += 1;
    }
    size.iter().position(|&s| s > 1).map(|c| c as u32)
}

/// An isomorphism from `g1` coloured `c1` to `g2` coloured `c2`; both
/// colourings are refined and carry equal traces.
fn extend(g1: &Graph, g2: &Graph, c1: &[u32], c2: &[u32]) -> Option<Vec<usize>> {
    let Some(cell) = target_cell(c1) else {
        let mut by_color = vec![0usize; c2.len()];
        for (w, &c) in c2.iter().enumerate() {
            by_color[c as usize] = w;
        }
        let map: Vec<usize> = c1.iter().map(|&c| by_color[c as usize]).collect();
        let ok = g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v]));
        return ok.then_some(map);
    };
    let v = c1.iter().position(|&c| c == cell).unwrap();
    let mut left = c1.to_vec();
    individualize(&mut left, v);
    let tl = refine(g1, &mut left);
    for w in (0..c2.len()).filter(|&w| c2[w] == cell) {
        let mut right = c2.to_vec();
        individualize(&mut right, w);
        if refine(g2, &mut right) == tl {
            if let Some(map) = extend(g1, g2, &left, &right) {
                return Some(map);
            }
        }
    }
    None
}

fn check_size(graph: &Graph, graph_max: usize) -> Result<()> {
    if graph.vertex_count() > graph_max {
        return Err(Error::GraphTooLarge(graph.vertex_count(), graph_max));
    }
    if graph.vertex_count() == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    Ok(())
}

/// The full automorphism group, with exact order.
///
/// Builds a base one point at a time. At each level the orbit of the new
/// base point under the pointwise stabilizer of the earlier ones is found by
/// searching for one automorphism per candidate image not already reached.
pub fn automorphism_group(graph: &Graph, graph_max: usize) -> Result<Group> {
    check_size(graph, graph_max)?;
    let n = graph.vertex_count();
    let mut colors = vec![0u32; n];
    refine(graph, &mut colors);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut order = BigUint::from(1u32);
    while let Some(cell) = target_cell(&colors) {
        let b = colors.iter().position(|&c| c == cell).unwrap();
        let mut left = colors.clone();
        individualize(&mut left, b);
        let tl = refine(graph, &mut left);
        let mut level: Vec<Permutation> = Vec::new();
        let mut orbit = vec![false; n];
        orbit[b] = true;
        for w in (0..n).filter(|&w| colors[w] == cell) {
            if orbit[w] {
                continue;
            }
            let mut right = colors.clone();
            individualize(&mut right, w);
            if refine(graph, &mut right) != tl {
                continue;
            }
            if let Some(map) = extend(graph, graph, &left, &right) {
                level.push(Permutation::from_images(map)?);
                orbit = point_orbit(&level, b, n);
            }
        }
        order *= BigUint::from(orbit.iter().filter(|&&x| x).count());
        gens.extend(level);
        colors = left;
    }
    if gens.is_empty() {
        return Ok(Group::trivial(n));
    }
    let group = Group::new(gens)?;
    if group.order() != order {
        return Err(Error::Internal(format!(
            "automorphism search order {order} disagrees with group order {}",
            group.order()
        )));
    }
    Ok(group)
}

fn point_orbit(gens: &[Permutation], b: usize, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[b] = true;
    let mut stack = vec![b];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// A vertex bijection carrying edges of `g1` onto edges of `g2`, if any.
pub fn are_isomorphic(g1: &Graph, g2: &Graph, graph_max: usize) -> Result<Option<Permutation>> {
    check_size(g1, graph_max)?;
    check_size(g2, graph_max)?;
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let n = g1.vertex_count();
    let (mut c1, mut c2) = (vec![0u32; n], vec![0u32; n]);
    if refine(g1, &mut c1) != refine(g2, &mut c2) {
        return Ok(None);
    }
    match extend(g1, g2, &c1, &c2) {
        Some(map) => Ok(Some(Permutation::from_images(map)?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn small_automorphism_groups() {
        let cases: [(Graph, u64); 6] = [
            (catalog::cycle(6), 12),
            (catalog::complete(5), 120),
            (catalog::complete_bipartite(2, 3), 12),
            (catalog::hypercube(3), 48),
            (Graph::edgeless(6), 720),
            (Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap(), 2),
        ];
        for (g, expected) in cases {
            let aut = automorphism_group(&g, 64).unwrap();
            assert_eq!(aut.order_u64(), Some(expected));
            assert!(crate::graph::is_invariant(&g, &aut).unwrap());
        }
        assert!(matches!(
            automorphism_group(&catalog::cycle(70), 64),
            Err(Error::GraphTooLarge(70, 64))
        ));
    }

    #[test]
    fn isomorphism_witnesses() {
        let p = catalog::petersen();
        let gp = catalog::generalized_petersen(5, 2).unwrap();
        assert!(are_isomorphic(&p, &gp, 64).unwrap().is_some());
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(are_isomorphic(&catalog::cycle(6), &two_triangles, 64).unwrap().is_none());
        // a relabeled Petersen graph
        let shuffle = [3usize, 7, 1, 9, 0, 4, 8, 2, 6, 5];
        let relabeled = Graph::new(10, p.edges().iter().map(|&(u, v)| (shuffle[u], shuffle[v]))).unwrap();
        let w = are_isomorphic(&p, &relabeled, 64).unwrap().unwrap();
        assert!(p.edges().iter().all(|&(u, v)| relabeled.has_edge(w.apply(u), w.apply(v))));
    }
}
