//! Edge-list and JSON serialization of [`LabeledGraph`].
//!
//! Edge list: a header line `# family=<name> n=<N> vertices=<V>`, then one
//! `u v` pair per line in ascending canonical order, newline-terminated.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Family, LabeledGraph, VertexRole};

pub fn to_edge_list(g: &LabeledGraph) -> String {
    let mut out = format!("# family={} n={} vertices={}\n", g.family(), g.n(), g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Header fields and edges recovered from an edge-list document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub family: Family,
    pub n: usize,
    pub vertices: usize,
    pub edges: Vec<Edge>,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::invalid("empty edge list"))?;
    let fields = header
        .strip_prefix("# ")
        .ok_or_else(|| Error::invalid("edge list header must start with `# `"))?;
    let mut family = None;
    let mut n = None;
    let mut vertices = None;
    for field in fields.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("bad header field `{field}`")))?;
        let number = || {
            value
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad number `{value}`")))
        };
        match key {
            "family" => family = Some(value.parse::<Family>()?),
            "n" => n = Some(number()?),
            "vertices" => vertices = Some(number()?),
            _ => return Err(Error::invalid(format!("unknown header key `{key}`"))),
        }
    }
    let mut edges = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace().map(|t| t.parse::<usize>());
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::invalid(format!("bad edge line `{line}`"))),
        }
    }
    Ok(EdgeList {
        family: family.ok_or_else(|| Error::invalid("header lacks family"))?,
        n: n.ok_or_else(|| Error::invalid("header lacks n"))?,
        vertices: vertices.ok_or_else(|| Error::invalid("header lacks vertices"))?,
        edges,
    })
}

#[derive(Serialize)]
struct GraphJson {
    family: Family,
    n: usize,
    vertices: usize,
    edges: Vec<[usize; 2]>,
    roles: BTreeMap<usize, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<usize, String>>,
}

/// JSON object with `family`, `n`, `vertices`, `edges`, `roles` and, for
/// Hanoi families, `labels`. Interior vertices are omitted from `roles`.
pub fn to_json(g: &LabeledGraph) -> serde_json::Value {
    let roles = g
        .roles()
        .iter()
        .enumerate()
        .filter(|(_, r)| **r != VertexRole::Interior)
        .map(|(v, r)| (v, r.to_string()))
        .collect();
    let labels: BTreeMap<usize, String> = g
        .labels()
        .iter()
        .enumerate()
        .filter_map(|(v, l)| l.as_ref().map(|l| (v, l.to_string())))
        .collect();
    let doc = GraphJson {
        family: g.family(),
        n: g.n(),
        vertices: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        roles,
        labels: (!labels.is_empty()).then_some(labels),
    };
    serde_json::to_value(doc).expect("graph JSON is always serializable")
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}
