//! wasm-bindgen entry points for the demo page in `www/`.
//!
//! Each function takes plain strings or numbers and returns a JSON string,
//! `{"ok": ...}` or `{"error": "..."}`, so the page needs no bindings beyond
//! `JSON.parse`.

use basicperm::graph::{automorphism_group, count_s_arcs, is_s_arc_transitive};
use basicperm::lattice::{LatticeKind, SubgroupLattice};
use basicperm::numeric::{density_constant, format_fixed};
use basicperm::structure::{is_primitive, is_quasiprimitive, onan_scott_type};
use basicperm::{catalog, Error, Graph, Group};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const ENUM_CAP: usize = 20_000;
const TUPLE_CAP: usize = 1_000_000;
const GRAPH_MAX: usize = 64;
const CUTOFF_MAX: u32 = 20_000_000;

fn wrap(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => json!({ "ok": v }),
        Err(e) => json!({ "error": e }),
    }
    .to_string()
}

fn err(e: Error) -> String {
    e.to_string()
}

/// A catalog name such as `a5_coset_c5`, or group text with a `degree` line.
fn group_input(src: &str) -> Result<Group, String> {
    let src = src.trim();
    if src.starts_with("degree") || src.contains('\n') {
        Group::parse_text(src).map_err(err)
    } else {
        catalog::group(src).map_err(err)
    }
}

fn graph_input(src: &str) -> Result<Graph, String> {
    let src = src.trim();
    if src.starts_with("graph") || src.contains('\n') {
        Graph::parse(src).map_err(err)
    } else {
        catalog::graph(src).map_err(err)
    }
}

fn lattice_kind(name: &str) -> Result<LatticeKind, String> {
    match name {
        "L1" => Ok(LatticeKind::L1),
        "L2" => Ok(LatticeKind::L2),
        "L3" => Ok(LatticeKind::L3),
        _ => Err(format!("unknown lattice {name:?}")),
    }
}

fn group_report(src: &str, lattice: &str) -> Result<Value, String> {
    let g = group_input(src)?;
    let kind = lattice_kind(lattice)?;
    if !g.is_transitive() {
        return Err(err(Error::NotTransitive));
    }
    let l = SubgroupLattice::build(kind, &g, 0, ENUM_CAP).map_err(err)?;
    let nodes: Vec<Value> = (0..l.nodes.len())
        .map(|id| {
            json!({
                "id": id,
                "order": l.nodes[id].order().to_string(),
                "index": l.index(id),
            })
        })
        .collect();
    let mut components = Vec::new();
    for &(h, k) in l.covers() {
        let c = l.component(h, k).map_err(err)?;
        components.push(json!({
            "lower": h,
            "upper": k,
            "degree": c.degree,
            "order": c.order().to_string(),
        }));
    }
    let onan_scott = if g.degree() > 1 {
        Some(onan_scott_type(&g, ENUM_CAP).map_err(err)?)
    } else {
        None
    };
    Ok(json!({
        "degree": g.degree(),
        "order": g.order().to_string(),
        "primitive": is_primitive(&g).map_err(err)?,
        "quasiprimitive": is_quasiprimitive(&g, ENUM_CAP).map_err(err)?,
        "onan_scott": onan_scott.map(|t| format!("{:?}", t.tag)),
        "lattice": lattice,
        "nodes": nodes,
        "covers": l.covers(),
        "bottom": l.bottom,
        "top": l.top,
        "components": components,
    }))
}

fn arc_report(src: &str, s_max: usize) -> Result<Value, String> {
    let gr = graph_input(src)?;
    let g = automorphism_group(&gr, GRAPH_MAX).map_err(err)?;
    let mut levels = Vec::new();
    for s in 0..=s_max {
        let transitive = match is_s_arc_transitive(&gr, &g, s, TUPLE_CAP) {
            Ok(t) => Some(t),
            Err(Error::Vacuous(_)) => None,
            Err(e) => return Err(err(e)),
        };
        levels.push(json!({ "s": s, "arcs": count_s_arcs(&gr, s), "transitive": transitive }));
    }
    Ok(json!({
        "vertices": gr.vertex_count(),
        "edges": gr.edge_count(),
        "valency": gr.regular_valency(),
        "girth": gr.girth(),
        "automorphisms": g.order().to_string(),
        "levels": levels,
    }))
}

fn constant_report(cutoff: u32) -> Result<Value, String> {
    if cutoff > CUTOFF_MAX {
        return Err(format!("cutoff above {CUTOFF_MAX}"));
    }
    let e = density_constant(u64::from(cutoff)).map_err(err)?;
    Ok(json!({
        "cutoff": cutoff,
        "lower": format_fixed(e.lower()),
        "upper": format_fixed(e.upper()),
        "tail_bound": format_fixed(e.tail_bound),
    }))
}

/// Lattice of a transitive group together with its basic components.
#[wasm_bindgen]
pub fn analyze_group(src: &str, lattice: &str) -> String {
    wrap(group_report(src, lattice))
}

/// s-arc transitivity of a graph under its full automorphism group, for s up to `s_max`.
#[wasm_bindgen]
pub fn arc_profile(src: &str, s_max: usize) -> String {
    wrap(arc_report(src, s_max))
}

#[wasm_bindgen]
pub fn density(cutoff: u32) -> String {
    wrap(constant_report(cutoff))
}

#[wasm_bindgen]
pub fn catalog_names() -> String {
    json!({ "groups": catalog::GROUP_NAMES, "graphs": catalog::GRAPH_NAMES }).to_string()
}
