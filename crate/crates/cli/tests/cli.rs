use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_basicperm"));
    c.env_remove("BP_ENUM_CAP").env_remove("BP_GRAPH_MAX");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("basicperm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn analyze_group_examples() {
    let a5 = scratch("a5_12.txt", &basicperm::catalog::a5_coset_c5().to_text());
    let out = run(&["analyze-group", a5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["result"]["quasiprimitive"], true);
    assert_eq!(r["result"]["primitive"], false);
    let l1 = &r["result"]["lattices"][0];
    assert_eq!(l1["kind"], "L1");
    assert!(l1["nodes"].as_array().unwrap().len() >= 3);
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);

    let s4 = scratch("s4.txt", "# symmetric group\ndegree 4\n(1 2)\n(1 2 3 4)\n");
    let r = json(&run(&["analyze-group", s4.to_str().unwrap(), "--lattices", "L1"]));
    assert_eq!(r["result"]["primitive"], true);
    assert_eq!(r["result"]["lattices"][0]["covers"].as_array().unwrap().len(), 1);
    assert!(r["result"]["wreath_embedding"]["address_bijective"].as_bool().unwrap());

    let intransitive = scratch("c2.txt", "degree 4\n(1 2)\n");
    let out = run(&["analyze-group", intransitive.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "group is not transitive");
}

#[test]
fn analyze_graph_examples() {
    let r = json(&run(&["analyze-graph", "catalog:petersen", "catalog:aut_petersen", "--s", "4"]));
    let levels: Vec<Value> = r["result"]["s_arc_transitivity"].as_array().unwrap().clone();
    let flags: Vec<bool> = levels.iter().map(|l| l["transitive"].as_bool().unwrap()).collect();
    assert_eq!(flags, [true, true, true, true, false]);
    assert_eq!(r["result"]["max_s"], 3);

    let c7 = scratch("c7.txt", &basicperm::catalog::cycle(7).to_text());
    let r = json(&run(&["analyze-graph", c7.to_str().unwrap(), "catalog:d14"]));
    assert_eq!(r["result"]["distance_transitive"], true);
    assert_eq!(r["inputs"].as_array().unwrap().len(), 2);

    let out = run(&["analyze-graph", "catalog:petersen", "catalog:s5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().contains("degree mismatch"));
    let out = run(&["analyze-graph", "catalog:cycle5", "catalog:s5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reduce_examples() {
    let r = json(&run(&["reduce", "catalog:dodecahedron", "--s", "2"]));
    let steps = r["result"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0]["normal_subgroup"]["order"], "2");
    assert_eq!(steps[0]["is_cover"], true);
    assert_eq!(steps[0]["quotient"]["vertices"], 10);
    assert_eq!(r["result"]["terminal"]["kind"], "quasiprimitive");
    assert_eq!(r["result"]["terminal"]["group"]["order"], "60");

    let r = json(&run(&["reduce", "catalog:petersen", "--s", "2"]));
    assert_eq!(r["result"]["steps"].as_array().unwrap().len(), 0);

    let r = json(&run(&["reduce", "catalog:k3_3", "--explore-all"]));
    assert_eq!(r["result"]["terminal"]["kind"], "bipartite_obstruction");

    let out = run(&["reduce", "catalog:cycle6", "catalog:d12", "--s", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["analyze-group", "catalog:agl1_5"][..],
        &["reduce", "catalog:dodecahedron"][..],
        &["constant", "--cutoff", "5000"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let timed = json(&run(&["--timing", "constant", "--cutoff", "10"]));
    assert!(timed["timing_ms"].is_u64());
    assert!(json(&run(&["constant", "--cutoff", "10"])).get("timing_ms").is_none());
}

#[test]
fn caps_truncate_with_exit_two() {
    let out = run(&["analyze-group", "catalog:hs60", "--enum-cap", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["complete"], false);
    assert!(!r["omissions"].as_array().unwrap().is_empty());
    assert_eq!(r["result"]["primitive"], true);

    // the environment sets the cap, a flag overrides it
    let env = bin()
        .env("BP_ENUM_CAP", "1000")
        .args(["analyze-group", "catalog:hs60", "--lattices", "L2"])
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
    let flag = bin()
        .env("BP_ENUM_CAP", "1000")
        .args(["analyze-group", "catalog:hs60", "--lattices", "L2", "--enum-cap", "10000"])
        .output()
        .unwrap();
    assert_eq!(flag.status.code(), Some(0));
    assert_eq!(json(&flag)["caps"]["enum_cap"], 10000);

    let out = run(&["analyze-graph", "catalog:cycle70"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["analyze-graph", "catalog:cycle70", "catalog:d140", "--graph-max", "100"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn constant_and_catalog() {
    let r = json(&run(&["constant", "--cutoff", "2"]));
    assert_eq!(r["result"]["partial_sum"], "1.5");
    let r = json(&run(&["catalog"]));
    assert!(r["result"]["graphs"].as_array().unwrap().iter().any(|g| g == "petersen"));
    let out = run(&["analyze-group", "catalog:nope"]);
    assert_eq!(out.status.code(), Some(1));
}
