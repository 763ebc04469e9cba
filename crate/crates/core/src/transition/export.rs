//! DOT and JSON renderings of a forest.

use serde::Serialize;

use super::forest::TransitionForest;
use super::split::SplitRoute;
use crate::algebra::Ambient;

#[derive(Clone, Debug, Serialize)]
pub struct NodeJson {
    pub label: String,
    pub seed: bool,
    pub generators: Vec<String>,
    pub initial: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    pub children: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<SplitRoute>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ForestJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient: Option<Ambient>,
    pub nodes: Vec<NodeJson>,
}

pub fn forest_json(forest: &TransitionForest) -> ForestJson {
    let ambient = forest.nodes.first().and_then(|n| n.ideal.ring().ambient());
    let nodes = forest
        .nodes
        .iter()
        .map(|n| {
            let ring = n.ideal.ring();
            NodeJson {
                label: n.label.clone(),
                seed: n.seed,
                generators: n.ideal.canonical_generators(),
                initial: n.j.generators().iter().map(|m| ring.format_monomial(m)).collect(),
                u: n.u.map(|v| v.to_string()),
                children: n.children.iter().map(|&c| forest.nodes[c].label.clone()).collect(),
                quotient: n.quotient.map(|q| forest.nodes[q].label.clone()),
                route: n.route,
            }
        })
        .collect();
    ForestJson { ambient, nodes }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Seeds are plain text; nodes added by the recursion are boxed. Edges are
/// labeled by `u_I`, quotient edges are dashed.
pub fn forest_dot(forest: &TransitionForest) -> String {
    let mut out = String::from("digraph forest {\n  node [fontname=\"Helvetica\"];\n");
    for (k, n) in forest.nodes.iter().enumerate() {
        let gens = n.ideal.canonical_generators().join(", ");
        let shape = if n.seed { "plaintext" } else { "box" };
        out.push_str(&format!("  n{k} [label=\"{}: <{}>\", shape={shape}];\n", escape(&n.label), escape(&gens)));
    }
    for (k, n) in forest.nodes.iter().enumerate() {
        let u = n.u.map(|v| v.to_string()).unwrap_or_default();
        for &c in &n.children {
            out.push_str(&format!("  n{k} -> n{c} [label=\"{u}\"];\n"));
        }
        if let Some(q) = n.quotient {
            out.push_str(&format!("  n{k} -> n{q} [style=dashed, label=\"(I : {u})\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}
