use serde::Serialize;

use super::arcs::{is_s_arc_transitive, require_invariant};
use super::Graph;
use crate::error::{Error, Result};
use crate::group::{set_orbit, sorted, ActionImage, Group, Limits};
use crate::perm::Permutation;
use crate::structure::{is_primitive, is_quasiprimitive, normal_subgroups, orbits, BlockSystem};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QuotientNotes {
    pub single_vertex: bool,
    pub two_vertex: bool,
    /// Some edge of the original graph lies inside a part.
    pub internal_edges: bool,
    pub connected: bool,
    /// Two parts with no internal edges: the original graph is bipartite.
    pub bipartite_obstruction: bool,
    /// Whether the induced group is primitive on the parts (degree ≥ 2).
    pub vertex_primitive: Option<bool>,
    /// Whether the induced group is arc-transitive on the quotient (when it has edges).
    pub arc_transitive: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct QuotientResult {
    /// Vertex `i` is `parts.blocks[i]`; parts are ordered by least vertex.
    pub quotient: Graph,
    pub parts: BlockSystem,
    pub induced_group: ActionImage,
    pub is_cover: bool,
    pub notes: QuotientNotes,
}

fn build_quotient(graph: &Graph, group: &Group, parts: BlockSystem, tuple_cap: usize) -> Result<QuotientResult> {
    let part = |v: usize| parts.block_of[v].unwrap();
    let quotient = Graph::new_lossy(
        parts.len(),
        graph.edges().iter().map(|&(u, v)| (part(u), part(v))),
    );
    let induced_group = ActionImage::on_parts(group, &parts.blocks);
    let internal_edges = graph.edges().iter().any(|&(u, v)| part(u) == part(v));
    let m = quotient.vertex_count();
    let vertex_primitive = if m >= 2 {
        Some(is_primitive(&induced_group.image)?)
    } else {
        None
    };
    let arc_transitive = if quotient.edge_count() > 0 {
        Some(is_s_arc_transitive(&quotient, &induced_group.image, 1, tuple_cap)?)
    } else {
        None
    };
    let notes = QuotientNotes {
        single_vertex: m == 1,
        two_vertex: m == 2,
        internal_edges,
        connected: quotient.is_connected(),
        bipartite_obstruction: m == 2 && !internal_edges && graph.edge_count() > 0,
        vertex_primitive,
        arc_transitive,
    };
    let mut result = QuotientResult {
        quotient,
        parts,
        induced_group,
        is_cover: false,
        notes,
    };
    result.is_cover = is_normal_cover(graph, &result);
    Ok(result)
}

/// The quotient on the `G`-images of `α^H`, for `G_α ≤ H ≤ G`.
pub fn quotient_graph(
    graph: &Graph,
    group: &Group,
    h: &Group,
    alpha: usize,
    tuple_cap: usize,
) -> Result<QuotientResult> {
    require_invariant(graph, group)?;
    let n = graph.vertex_count();
    if alpha >= n {
        return Err(Error::PointOutOfRange(alpha + 1, n));
    }
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if h.degree() != n || !h.is_subgroup_of(group) {
        return Err(Error::Containment("H is not contained in G".into()));
    }
    if !group.point_stabilizer(alpha)?.is_subgroup_of(h) {
        return Err(Error::Containment("H does not contain the point stabilizer".into()));
    }
    let block = sorted(h.orbit(alpha));
    let parts = BlockSystem::from_parts(n, set_orbit(group.generators(), &block, n))?;
    build_quotient(graph, group, parts, tuple_cap)
}

/// The quotient on the orbits of a normal subgroup `N`.
pub fn normal_quotient(graph: &Graph, group: &Group, n: &Group, tuple_cap: usize) -> Result<QuotientResult> {
    require_invariant(graph, group)?;
    if n.degree() != group.degree() || !n.is_normal_in(group) {
        return Err(Error::NotNormal);
    }
    let parts = BlockSystem::from_parts(graph.vertex_count(), orbits(n))?;
    build_quotient(graph, group, parts, tuple_cap)
}

/// Every quotient edge is a perfect matching between its two parts and no
/// edge lies inside a part.
pub fn is_normal_cover(graph: &Graph, result: &QuotientResult) -> bool {
    let parts = &result.parts;
    if graph
        .edges()
        .iter()
        .any(|&(u, v)| parts.block_of[u] == parts.block_of[v])
    {
        return false;
    }
    for &(p, q) in result.quotient.edges() {
        for (a, b) in [(p, q), (q, p)] {
            for &v in &parts.blocks[a] {
                let hits = graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| parts.block_of[w] == Some(b))
                    .count();
                if hits != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Graph on `subset` (sorted, relabeled `0..`), adjacent when at distance 2.
pub fn distance_two_graph(graph: &Graph, subset: &[usize]) -> Result<Graph> {
    if subset.is_empty() {
        return Err(Error::Precondition("vertex subset is empty".into()));
    }
    let n = graph.vertex_count();
    if let Some(&x) = subset.iter().find(|&&x| x >= n) {
        return Err(Error::PointOutOfRange(x + 1, n));
    }
    let mut verts = subset.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let mut edges = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        let dist = graph.distances_from(u);
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if dist[v] == Some(2) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(verts.len(), edges)
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateInfo {
    pub order: String,
    pub orbit_count: usize,
    pub generators: Vec<Permutation>,
    pub chosen: bool,
}

#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub normal_subgroup: Group,
    /// Every maximal intransitive normal subgroup seen at this step.
    pub candidates: Vec<CandidateInfo>,
    pub result: QuotientResult,
    /// The induced group is s-arc-transitive on the quotient.
    pub s_arc_transitive: bool,
}

#[derive(Clone, Debug)]
pub enum ReductionTerminal {
    /// The current group is quasiprimitive on the current graph.
    Quasiprimitive { graph: Graph, group: Group, s_arc_transitive: bool },
    /// Every maximal intransitive normal subgroup has exactly two orbits.
    BipartiteObstruction {
        graph: Graph,
        group: Group,
        candidates: Vec<CandidateInfo>,
    },
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub s: usize,
    pub steps: Vec<ReductionStep>,
    pub terminal: ReductionTerminal,
}

impl ReductionTrace {
    pub fn final_graph(&self) -> &Graph {
        match &self.terminal {
            ReductionTerminal::Quasiprimitive { graph, .. }
            | ReductionTerminal::BipartiteObstruction { graph, .. } => graph,
        }
    }

    pub fn final_group(&self) -> &Group {
        match &self.terminal {
            ReductionTerminal::Quasiprimitive { group, .. }
            | ReductionTerminal::BipartiteObstruction { group, .. } => group,
        }
    }
}

/// Maximal members among the intransitive normal subgroups, in set order.
fn maximal_intransitive(group: &Group, cap: usize) -> Result<Vec<(Group, usize)>> {
    let set = normal_subgroups(group, cap)?;
    let intransitive: Vec<(Group, usize)> = set
        .members
        .iter()
        .filter(|m| !m.is_transitive())
        .map(|m| (m.clone(), orbits(m).len()))
        .collect();
    Ok(intransitive
        .iter()
        .filter(|(m, _)| {
            !intransitive
                .iter()
                .any(|(o, _)| o.order() > m.order() && m.is_subgroup_of(o))
        })
        .cloned()
        .collect())
}

/// Repeated normal quotients until the induced group is quasiprimitive.
pub fn reduce_to_quasiprimitive(graph: &Graph, group: &Group, s: usize, limits: &Limits) -> Result<ReductionTrace> {
    if s < 2 {
        return Err(Error::Precondition(format!("s must be at least 2, got {s}")));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if !is_s_arc_transitive(graph, group, s, limits.tuple_cap)? {
        return Err(Error::Precondition(format!("the group is not {s}-arc-transitive")));
    }
    let mut graph = graph.clone();
    let mut group = group.clone();
    let mut steps = Vec::new();
    loop {
        if is_quasiprimitive(&group, limits.enum_cap)? {
            let s_arc_transitive = is_s_arc_transitive(&graph, &group, s, limits.tuple_cap)?;
            return Ok(ReductionTrace {
                s,
                steps,
                terminal: ReductionTerminal::Quasiprimitive { graph, group, s_arc_transitive },
            });
        }
        let maximal = maximal_intransitive(&group, limits.enum_cap)?;
        let chosen = maximal
            .iter()
            .enumerate()
            .filter(|(_, (_, k))| *k >= 3)
            .max_by(|(i, (a, _)), (j, (b, _))| a.order().cmp(&b.order()).then(j.cmp(i)))
            .map(|(i, _)| i);
        let candidates: Vec<CandidateInfo> = maximal
            .iter()
            .enumerate()
            .map(|(i, (m, k))| CandidateInfo {
                order: m.order().to_string(),
                orbit_count: *k,
                generators: m.nontrivial_generators(),
                chosen: Some(i) == chosen,
            })
            .collect();
        let Some(chosen) = chosen else {
            return Ok(ReductionTrace {
                s,
                steps,
                terminal: ReductionTerminal::BipartiteObstruction { graph, group, candidates },
            });
        };
        let n = maximal[chosen].0.clone();
        let result = normal_quotient(&graph, &group, &n, limits.tuple_cap)?;
        let next_graph = result.quotient.clone();
        let next_group = result.induced_group.image.clone();
        let s_arc_transitive = is_s_arc_transitive(&next_graph, &next_group, s, limits.tuple_cap)?;
        steps.push(ReductionStep {
            normal_subgroup: n,
            candidates,
            result,
            s_arc_transitive,
        });
        graph = next_graph;
        group = next_group;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const CAP: usize = 10_000_000;

    #[test]
    fn distance_two() {
        let g = distance_two_graph(&catalog::cycle(6), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (3, 5)]);
        let k = distance_two_graph(&catalog::complete(5), &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(k.edge_count(), 0);
        let c4 = distance_two_graph(&catalog::cycle(4), &[3, 2, 1, 0]).unwrap();
        assert_eq!(c4.edges(), &[(0, 2), (1, 3)]);
        assert!(distance_two_graph(&catalog::cycle(4), &[]).is_err());
    }

    #[test]
    fn quotients_of_hexagon() {
        let c6 = catalog::cycle(6);
        let d12 = catalog::dihedral(6);
        let stab = d12.point_stabilizer(0).unwrap();
        let same = quotient_graph(&c6, &d12, &stab, 0, CAP).unwrap();
        assert_eq!(same.quotient, c6);
        assert!(same.is_cover);
        let whole = quotient_graph(&c6, &d12, &d12, 0, CAP).unwrap();
        assert_eq!(whole.quotient.vertex_count(), 1);
        assert!(whole.notes.single_vertex);
        let rot3 = Permutation::parse_cycles("(1 4)(2 5)(3 6)", 6).unwrap();
        let h = stab.with_generators(&[rot3]);
        let tri = quotient_graph(&c6, &d12, &h, 0, CAP).unwrap();
        assert_eq!(tri.quotient, catalog::cycle(3));
        assert_eq!(tri.parts.blocks, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert!(tri.is_cover);
        assert_eq!(tri.notes.arc_transitive, Some(true));
        let c3 = catalog::cyclic(6);
        assert!(matches!(
            quotient_graph(&c6, &d12, &Group::trivial(6), 0, CAP),
            Err(Error::Containment(_))
        ));
        assert!(quotient_graph(&c6, &c3, &d12, 0, CAP).is_err());
    }

    #[test]
    fn normal_quotients_and_covers() {
        let k4 = catalog::complete(4);
        let s4 = catalog::symmetric(4);
        let v4 = Group::from_cycles(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        let full = normal_quotient(&k4, &s4, &v4, CAP).unwrap();
        assert!(full.notes.single_vertex);
        let pair = Group::from_cycles(4, &["(1 2)(3 4)"]).unwrap();
        assert!(matches!(normal_quotient(&k4, &s4, &pair, CAP), Err(Error::NotNormal)));
        // inside a group normalizing it, the quotient is a single edge, not a cover
        let d8 = Group::from_cycles(4, &["(1 3 2 4)", "(1 2)"]).unwrap();
        let q = normal_quotient(&k4, &d8, &pair, CAP).unwrap();
        assert_eq!(q.quotient.edge_count(), 1);
        assert!(!q.is_cover);
        assert!(q.notes.two_vertex);
        let triv = normal_quotient(&k4, &s4, &Group::trivial(4), CAP).unwrap();
        assert_eq!(triv.quotient, k4);
        assert!(triv.is_cover);
    }

    #[test]
    fn reduction_preconditions() {
        let c6 = catalog::cycle(6);
        let d12 = catalog::dihedral(6);
        let limits = Limits::default();
        assert!(matches!(
            reduce_to_quasiprimitive(&c6, &d12, 1, &limits),
            Err(Error::Precondition(_))
        ));
        let p = catalog::petersen();
        let a5 = crate::structure::derived_subgroup(&catalog::petersen_group());
        let trace = reduce_to_quasiprimitive(&p, &a5, 2, &limits).unwrap();
        assert!(trace.steps.is_empty());
        assert!(matches!(
            trace.terminal,
            ReductionTerminal::Quasiprimitive { s_arc_transitive: true, .. }
        ));
    }

    #[test]
    fn bipartite_obstruction() {
        let k33 = catalog::complete_bipartite(3, 3);
        let g = crate::graph::automorphism_group(&k33, 64).unwrap();
        let trace = reduce_to_quasiprimitive(&k33, &g, 2, &Limits::default()).unwrap();
        assert!(trace.steps.is_empty());
        match &trace.terminal {
            ReductionTerminal::BipartiteObstruction { candidates, .. } => {
                assert!(!candidates.is_empty());
                assert!(candidates.iter().all(|c| c.orbit_count == 2));
            }
            other => panic!("unexpected terminal {other:?}"),
        }
    }
}
