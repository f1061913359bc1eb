//! `basicperm`: JSON reports on permutation groups and arc-transitive graphs.
//!
//! Inputs are file paths or `catalog:NAME`. The JSON report goes to stdout,
//! a short summary to stderr. Exit status is 0 for a complete analysis, 2
//! when a cap truncated it, and 1 on error.

mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use basicperm::graph::{
    automorphism_group, count_s_arcs, is_distance_transitive, is_invariant, is_s_arc_transitive,
    reduce_to_quasiprimitive, ReductionTerminal,
};
use basicperm::lattice::{wreath_embedding, LatticeKind, SubgroupLattice};
use basicperm::numeric::density_constant;
use basicperm::structure::{is_innately_transitive, is_primitive, is_quasiprimitive, onan_scott_type};
use basicperm::{catalog, Error, Limits};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use input::{load_graph, load_group, InputDigest};
use report::*;

#[derive(Parser, Debug)]
#[command(name = "basicperm", version, about = "Basic components of transitive permutation groups")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    /// Include wall-clock timing in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Serialize)]
struct CapArgs {
    /// Largest group order that may be enumerated element by element.
    #[arg(long, global = true, env = "BP_ENUM_CAP")]
    enum_cap: Option<usize>,
    /// Largest graph for automorphism and isomorphism search.
    #[arg(long, global = true, env = "BP_GRAPH_MAX")]
    graph_max: Option<usize>,
    /// Largest tuple orbit held in memory.
    #[arg(long, global = true)]
    tuple_cap: Option<usize>,
}

impl CapArgs {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            enum_cap: self.enum_cap.unwrap_or(d.enum_cap),
            graph_max: self.graph_max.unwrap_or(d.graph_max),
            tuple_cap: self.tuple_cap.unwrap_or(d.tuple_cap),
        }
    }
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
enum Command {
    /// Basicness flags, type, lattices, components and a wreath embedding.
    AnalyzeGroup {
        /// Group file or catalog:NAME.
        group: String,
        /// Base point, 1-based.
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        /// Lattices to build.
        #[arg(long, value_delimiter = ',', default_value = "L1,L2,L3")]
        lattices: Vec<LatticeKind>,
    },
    /// Arc and distance transitivity of a group on a graph.
    AnalyzeGraph {
        /// Graph file or catalog:NAME.
        graph: String,
        /// Group file or catalog:NAME; defaults to the full automorphism group.
        group: Option<String>,
        /// Largest s to test.
        #[arg(long, default_value_t = 3)]
        s: usize,
    },
    /// Normal-quotient reduction to a quasiprimitive quotient.
    Reduce {
        graph: String,
        /// Defaults to the full automorphism group.
        group: Option<String>,
        #[arg(long, default_value_t = 2)]
        s: usize,
        /// Report every maximal intransitive normal subgroup at each step.
        #[arg(long)]
        explore_all: bool,
    },
    /// Enclosure of the sum of 1/(d·φ(d)).
    Constant {
        #[arg(long, default_value_t = 10_000_000)]
        cutoff: u64,
    },
    /// Built-in groups and graphs.
    Catalog,
}

/// Collects omissions caused by caps; other errors pass through.
struct Run {
    limits: Limits,
    omissions: Vec<String>,
}

impl Run {
    fn capped<T>(&mut self, what: &str, r: basicperm::Result<T>) -> Result<Option<T>, String> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e @ (Error::GroupTooLarge { .. } | Error::TupleCap(_) | Error::GraphTooLarge(..))) => {
                self.omissions.push(format!("{what}: {e}"));
                Ok(None)
            }
            Err(e) => Err(e.to_string()),
        }
    }
}

fn analyze_group(
    run: &mut Run,
    inputs: &mut Vec<InputDigest>,
    source: &str,
    alpha: usize,
    kinds: &[LatticeKind],
) -> Result<GroupAnalysis, String> {
    let (g, d) = load_group("group", source)?;
    inputs.push(d);
    if alpha == 0 || alpha > g.degree() {
        return Err(format!("base point {alpha} out of range 1..={}", g.degree()));
    }
    let a = alpha - 1;
    if !g.is_transitive() {
        return Err(Error::NotTransitive.to_string());
    }
    let cap = run.limits.enum_cap;
    let primitive = is_primitive(&g).map_err(|e| e.to_string())?;
    let quasiprimitive = run.capped("quasiprimitivity", is_quasiprimitive(&g, cap))?;
    let innately_transitive = run.capped("innate transitivity", is_innately_transitive(&g, cap))?;
    let onan_scott = if g.degree() > 1 {
        run.capped("type", onan_scott_type(&g, cap))?
    } else {
        None
    };
    let mut lattices = Vec::new();
    let mut wreath = None;
    for &kind in kinds {
        let Some(l) = run.capped(&format!("lattice {kind:?}"), SubgroupLattice::build(kind, &g, a, cap))? else {
            continue;
        };
        let mut comps = Vec::new();
        for &(h, k) in l.covers() {
            let c = l.component(h, k).map_err(|e| e.to_string())?;
            let flags = run.capped(&format!("{kind:?} component ({h}, {k}) flags"), c.flags(cap))?;
            comps.push(ComponentView::new(&c, flags));
        }
        if kind == LatticeKind::L1 {
            if let Some(chain) = l.maximal_chains().into_iter().next() {
                let cert = wreath_embedding(&l, &chain).map_err(|e| e.to_string())?;
                wreath = Some(serde_json::to_value(&cert).map_err(|e| e.to_string())?);
            }
        }
        lattices.push(LatticeView::new(&l, comps));
    }
    Ok(GroupAnalysis {
        group: (&g).into(),
        base_point: alpha,
        transitive: true,
        primitive,
        quasiprimitive,
        innately_transitive,
        onan_scott,
        lattices,
        wreath_embedding: wreath,
    })
}

fn load_pair(
    run: &mut Run,
    inputs: &mut Vec<InputDigest>,
    graph: &str,
    group: Option<&str>,
) -> Result<(basicperm::Graph, basicperm::Group, String), String> {
    let (gr, d) = load_graph("graph", graph)?;
    inputs.push(d);
    let (g, source) = match group {
        Some(src) => {
            let (g, d) = load_group("group", src)?;
            inputs.push(d);
            (g, src.to_string())
        }
        None => {
            let g = automorphism_group(&gr, run.limits.graph_max).map_err(|e| e.to_string())?;
            (g, "automorphism_group".to_string())
        }
    };
    if !is_invariant(&gr, &g).map_err(|e| e.to_string())? {
        return Err(Error::NotInvariant.to_string());
    }
    Ok((gr, g, source))
}

fn analyze_graph(
    run: &mut Run,
    inputs: &mut Vec<InputDigest>,
    graph: &str,
    group: Option<&str>,
    s_max: usize,
) -> Result<GraphAnalysis, String> {
    let (gr, g, group_source) = load_pair(run, inputs, graph, group)?;
    let mut levels = Vec::new();
    let mut max_s = None;
    let mut unbroken = true;
    for s in 0..=s_max {
        let arcs = count_s_arcs(&gr, s);
        let transitive = match is_s_arc_transitive(&gr, &g, s, run.limits.tuple_cap) {
            Err(Error::Vacuous(_)) => None,
            r => run.capped(&format!("{s}-arc transitivity"), r)?,
        };
        if unbroken && transitive == Some(true) {
            max_s = Some(s);
        } else {
            unbroken = false;
        }
        levels.push(ArcLevel { s, arcs, transitive });
    }
    let distance_transitive = if gr.is_connected() {
        run.capped("distance transitivity", is_distance_transitive(&gr, &g, run.limits.tuple_cap))?
    } else {
        None
    };
    Ok(GraphAnalysis {
        graph: (&gr).into(),
        group: (&g).into(),
        group_source,
        s_arc_transitivity: levels,
        max_s,
        distance_transitive,
    })
}

fn reduce(
    run: &mut Run,
    inputs: &mut Vec<InputDigest>,
    graph: &str,
    group: Option<&str>,
    s: usize,
    explore_all: bool,
) -> Result<Option<ReductionView>, String> {
    let (gr, g, _) = load_pair(run, inputs, graph, group)?;
    let limits = run.limits.clone();
    let Some(trace) = run.capped("reduction", reduce_to_quasiprimitive(&gr, &g, s, &limits))? else {
        return Ok(None);
    };
    let pick = |cands: &[basicperm::graph::CandidateInfo]| -> Vec<CandidateView> {
        cands
            .iter()
            .filter(|c| explore_all || c.chosen)
            .map(CandidateView::from)
            .collect()
    };
    let steps = trace
        .steps
        .iter()
        .map(|st| StepView {
            normal_subgroup: (&st.normal_subgroup).into(),
            orbit_count: st.result.parts.len(),
            parts: st.result.parts.blocks.iter().map(|b| one_based(b)).collect(),
            quotient: (&st.result.quotient).into(),
            induced_group: (&st.result.induced_group.image).into(),
            is_cover: st.result.is_cover,
            s_arc_transitive: st.s_arc_transitive,
            notes: st.result.notes.clone(),
            candidates: pick(&st.candidates),
        })
        .collect();
    let terminal = match &trace.terminal {
        ReductionTerminal::Quasiprimitive { graph, group, s_arc_transitive } => TerminalView {
            kind: "quasiprimitive",
            graph: graph.into(),
            group: group.into(),
            s_arc_transitive: Some(*s_arc_transitive),
            candidates: Vec::new(),
        },
        ReductionTerminal::BipartiteObstruction { graph, group, candidates } => TerminalView {
            kind: "bipartite_obstruction",
            graph: graph.into(),
            group: group.into(),
            s_arc_transitive: None,
            candidates: candidates.iter().map(CandidateView::from).collect(),
        },
    };
    Ok(Some(ReductionView { s, steps, terminal }))
}

#[derive(Serialize)]
struct CatalogListing {
    groups: &'static [&'static str],
    graphs: &'static [&'static str],
}

fn summary_line(command: &Command, result: &serde_json::Value) -> String {
    let show = |v: &serde_json::Value| v.as_str().map_or_else(|| v.to_string(), str::to_string);
    let get = |k: &str| result.get(k).map_or_else(|| "null".into(), show);
    match command {
        Command::AnalyzeGroup { .. } => format!(
            "order {}, primitive {}, quasiprimitive {}, innately transitive {}",
            show(&result["group"]["order"]),
            get("primitive"),
            get("quasiprimitive"),
            get("innately_transitive")
        ),
        Command::AnalyzeGraph { .. } => format!(
            "{} vertices, group order {}, max s {}, distance transitive {}",
            result["graph"]["vertices"],
            show(&result["group"]["order"]),
            get("max_s"),
            get("distance_transitive")
        ),
        Command::Reduce { .. } => format!(
            "{} step(s), terminal {}",
            result["steps"].as_array().map_or(0, |a| a.len()),
            show(&result["terminal"]["kind"])
        ),
        Command::Constant { .. } => format!("interval {}", result["interval"]),
        Command::Catalog => "catalog listed".into(),
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut run = Run {
        limits: cli.caps.limits(),
        omissions: Vec::new(),
    };
    let mut inputs = Vec::new();
    let outcome: Result<serde_json::Value, String> = (|| {
        Ok(match &cli.command {
            Command::AnalyzeGroup { group, alpha, lattices } => {
                to_json(&analyze_group(&mut run, &mut inputs, group, *alpha, lattices)?)
            }
            Command::AnalyzeGraph { graph, group, s } => {
                to_json(&analyze_graph(&mut run, &mut inputs, graph, group.as_deref(), *s)?)
            }
            Command::Reduce { graph, group, s, explore_all } => {
                to_json(&reduce(&mut run, &mut inputs, graph, group.as_deref(), *s, *explore_all)?)
            }
            Command::Constant { cutoff } => {
                to_json(&density_constant(*cutoff).map_err(|e| e.to_string())?)
            }
            Command::Catalog => to_json(&CatalogListing {
                groups: catalog::GROUP_NAMES,
                graphs: catalog::GRAPH_NAMES,
            }),
        })
    })();
    match outcome {
        Ok(result) => {
            eprintln!("{}", summary_line(&cli.command, &result));
            let complete = run.omissions.is_empty();
            for o in &run.omissions {
                eprintln!("omitted: {o}");
            }
            let report = Report {
                schema_version: SCHEMA_VERSION,
                command: &cli.command,
                inputs,
                caps: run.limits,
                complete,
                omissions: run.omissions,
                result,
                timing_ms: cli.timing.then(|| start.elapsed().as_millis()),
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            if complete {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            let report = ErrorReport {
                schema_version: SCHEMA_VERSION,
                command: &cli.command,
                error: message,
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            ExitCode::from(1)
        }
    }
}

