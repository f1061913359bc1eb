//! JSON views of library values. Points and vertices are 1-based here,
//! matching the input formats.

use basicperm::graph::{CandidateInfo, QuotientNotes};
use basicperm::lattice::{Component, ComponentFlags, SubgroupLattice};
use basicperm::structure::OnanScottType;
use basicperm::{Graph, Group, Limits, Permutation};
use serde::Serialize;

use crate::input::InputDigest;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Report<C: Serialize, R: Serialize> {
    pub schema_version: u32,
    pub command: C,
    pub inputs: Vec<InputDigest>,
    pub caps: Limits,
    /// False when a cap cut part of the analysis short.
    pub complete: bool,
    pub omissions: Vec<String>,
    pub result: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Serialize)]
pub struct ErrorReport<C: Serialize> {
    pub schema_version: u32,
    pub command: C,
    pub error: String,
}

#[derive(Serialize)]
pub struct GroupView {
    pub degree: usize,
    pub order: String,
    pub generators: Vec<Permutation>,
}

impl From<&Group> for GroupView {
    fn from(g: &Group) -> Self {
        GroupView {
            degree: g.degree(),
            order: g.order().to_string(),
            generators: g.nontrivial_generators(),
        }
    }
}

#[derive(Serialize)]
pub struct GraphView {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphView {
    fn from(g: &Graph) -> Self {
        GraphView {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
        }
    }
}

pub fn one_based(points: &[usize]) -> Vec<usize> {
    points.iter().map(|&x| x + 1).collect()
}

#[derive(Serialize)]
pub struct NodeView {
    pub id: usize,
    pub order: String,
    pub index: usize,
    /// The orbit of the base point under the node group.
    pub block: Vec<usize>,
}

#[derive(Serialize)]
pub struct ComponentView {
    pub lower: usize,
    pub upper: usize,
    pub degree: usize,
    pub order: String,
    #[serde(flatten)]
    pub flags: Option<ComponentFlags>,
}

impl ComponentView {
    pub fn new(c: &Component, flags: Option<ComponentFlags>) -> Self {
        let (lower, upper) = c.pair.unwrap_or((0, 0));
        ComponentView {
            lower,
            upper,
            degree: c.degree,
            order: c.order().to_string(),
            flags,
        }
    }
}

#[derive(Serialize)]
pub struct LatticeView {
    pub kind: String,
    pub nodes: Vec<NodeView>,
    pub covers: Vec<[usize; 2]>,
    pub bottom: usize,
    pub top: usize,
    pub components: Vec<ComponentView>,
}

impl LatticeView {
    pub fn new(l: &SubgroupLattice, components: Vec<ComponentView>) -> Self {
        LatticeView {
            kind: format!("{:?}", l.kind),
            nodes: l
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| NodeView {
                    id,
                    order: n.order().to_string(),
                    index: l.index(id),
                    block: one_based(&n.block),
                })
                .collect(),
            covers: l.covers().iter().map(|&(h, k)| [h, k]).collect(),
            bottom: l.bottom,
            top: l.top,
            components,
        }
    }
}

#[derive(Serialize)]
pub struct GroupAnalysis {
    pub group: GroupView,
    pub base_point: usize,
    pub transitive: bool,
    pub primitive: bool,
    pub quasiprimitive: Option<bool>,
    pub innately_transitive: Option<bool>,
    pub onan_scott: Option<OnanScottType>,
    pub lattices: Vec<LatticeView>,
    pub wreath_embedding: Option<serde_json::Value>,
}

#[derive(Serialize)]
pub struct ArcLevel {
    pub s: usize,
    pub arcs: u64,
    /// `None` when there are no s-arcs or a cap was hit.
    pub transitive: Option<bool>,
}

#[derive(Serialize)]
pub struct GraphAnalysis {
    pub graph: GraphSummary,
    pub group: GroupView,
    pub group_source: String,
    pub s_arc_transitivity: Vec<ArcLevel>,
    /// Largest s with t-arc transitivity for every t ≤ s, within the levels computed.
    pub max_s: Option<usize>,
    pub distance_transitive: Option<bool>,
}

#[derive(Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub valency: Option<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> Self {
        GraphSummary {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            valency: g.regular_valency(),
            connected: g.is_connected(),
            bipartite: g.is_bipartite(),
            girth: g.girth(),
            diameter: g.diameter(),
        }
    }
}

#[derive(Serialize)]
pub struct CandidateView {
    pub order: String,
    pub orbit_count: usize,
    pub generators: Vec<Permutation>,
    pub chosen: bool,
}

impl From<&CandidateInfo> for CandidateView {
    fn from(c: &CandidateInfo) -> Self {
        CandidateView {
            order: c.order.clone(),
            orbit_count: c.orbit_count,
            generators: c.generators.clone(),
            chosen: c.chosen,
        }
    }
}

#[derive(Serialize)]
pub struct StepView {
    pub normal_subgroup: GroupView,
    pub orbit_count: usize,
    pub parts: Vec<Vec<usize>>,
    pub quotient: GraphView,
    pub induced_group: GroupView,
    pub is_cover: bool,
    pub s_arc_transitive: bool,
    pub notes: QuotientNotes,
    pub candidates: Vec<CandidateView>,
}

#[derive(Serialize)]
pub struct TerminalView {
    pub kind: &'static str,
    pub graph: GraphView,
    pub group: GroupView,
    pub s_arc_transitive: Option<bool>,
    pub candidates: Vec<CandidateView>,
}

#[derive(Serialize)]
pub struct ReductionView {
    pub s: usize,
    pub steps: Vec<StepView>,
    pub terminal: TerminalView,
}
