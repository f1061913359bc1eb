use std::fs;

use basicperm::{catalog, Graph, Group};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// A loaded input and the digest of the text it came from.
#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub role: &'static str,
    pub source: String,
    pub sha256: String,
}

fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn read(source: &str) -> Result<String, String> {
    fs::read_to_string(source).map_err(|e| format!("cannot read {source}: {e}"))
}

/// `catalog:NAME` or a path to a group file.
pub fn load_group(role: &'static str, source: &str) -> Result<(Group, InputDigest), String> {
    let (group, text) = match source.strip_prefix("catalog:") {
        Some(name) => {
            let g = catalog::group(name).map_err(|e| e.to_string())?;
            let text = g.to_text();
            (g, text)
        }
        None => {
            let text = read(source)?;
            let g = Group::parse_text(&text).map_err(|e| format!("{source}: {e}"))?;
            (g, text)
        }
    };
    let d = InputDigest {
        role,
        source: source.to_string(),
        sha256: digest(&text),
    };
    Ok((group, d))
}

/// `catalog:NAME` or a path to a graph file.
pub fn load_graph(role: &'static str, source: &str) -> Result<(Graph, InputDigest), String> {
    let (graph, text) = match source.strip_prefix("catalog:") {
        Some(name) => {
            let g = catalog::graph(name).map_err(|e| e.to_string())?;
            let text = g.to_text();
            (g, text)
        }
        None => {
            let text = read(source)?;
            let g = Graph::parse(&text).map_err(|e| format!("{source}: {e}"))?;
            (g, text)
        }
    };
    let d = InputDigest {
        role,
        source: source.to_string(),
        sha256: digest(&text),
    };
    Ok((graph, d))
}
