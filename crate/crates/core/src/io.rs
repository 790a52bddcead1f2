//! JSON file formats for graphs, subgraph sets, and queries.
//!
//! Graph file:
//! `{"nodes": [{"id", "attrs"}], "edges": [{"id", "src", "dst", "attrs"}]}`.
//! Subgraph-set file: `{"type", "groups": [{"nodes", "edges"}]}` where
//! `edges` may be omitted, in which case the group is node-induced.
//! Query file: the graph format with an optional per-edge
//! `min_multiplicity`.
//!
//! Serialization is deterministic: nodes sorted by id, edges in record
//! order, attribute maps sorted by key.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{AttrMap, EdgeId, EdgeRecord, Multigraph, NodeRecord, SgiSet, Subgraph};
use crate::matching::QueryGraph;

#[derive(Serialize, Deserialize)]
struct NodeFileRecord {
    id: String,
    #[serde(default, skip_serializing_if = "AttrMap::is_empty")]
    attrs: AttrMap,
}

#[derive(Serialize, Deserialize)]
struct EdgeFileRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    src: String,
    dst: String,
    #[serde(default, skip_serializing_if = "AttrMap::is_empty")]
    attrs: AttrMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    min_multiplicity: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    nodes: Vec<NodeFileRecord>,
    edges: Vec<EdgeFileRecord>,
}

impl GraphFile {
    fn from_graph(g: &Multigraph, min_mult: Option<&BTreeMap<EdgeId, u32>>) -> Self {
        GraphFile {
            nodes: g
                .node_ids()
                .iter()
                .map(|id| NodeFileRecord {
                    id: id.to_string(),
                    attrs: g.node_attrs(id).cloned().unwrap_or_default(),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeFileRecord {
                    id: Some(e.id.to_string()),
                    src: e.src.to_string(),
                    dst: e.dst.to_string(),
                    attrs: e.attrs.clone(),
                    min_multiplicity: min_mult.and_then(|m| m.get(&e.id).copied()),
                })
                .collect(),
        }
    }

    fn into_graph(self) -> Result<Multigraph> {
        let nodes = self
            .nodes
            .into_iter()
            .map(|n| NodeRecord::with_attrs(n.id, n.attrs))
            .collect();
        let edges = self
            .edges
            .into_iter()
            .map(|e| {
                let mut record = EdgeRecord::with_attrs(e.src, e.dst, e.attrs);
                if let Some(id) = e.id {
                    record = record.id(id);
                }
                record
            })
            .collect();
        Multigraph::build(nodes, edges)
    }
}

pub fn graph_to_json(g: &Multigraph) -> String {
    let mut out =
        serde_json::to_string_pretty(&GraphFile::from_graph(g, None)).expect("graph serializes");
    out.push('\n');
    out
}

pub fn graph_from_json(text: &str) -> Result<Multigraph> {
    let file: GraphFile = serde_json::from_str(text)?;
    file.into_graph()
}

pub fn query_to_json(q: &QueryGraph) -> String {
    let mut out = serde_json::to_string_pretty(&GraphFile::from_graph(
        q.graph(),
        Some(q.min_multiplicity_map()),
    ))
    .expect("query serializes");
    out.push('\n');
    out
}

pub fn query_from_json(text: &str) -> Result<QueryGraph> {
    let file: GraphFile = serde_json::from_str(text)?;
    let mut min_mult = BTreeMap::new();
    for (i, edge) in file.edges.iter().enumerate() {
        if let Some(m) = edge.min_multiplicity {
            let id = edge.id.clone().unwrap_or_else(|| format!("e{i}"));
            min_mult.insert(EdgeId::new(id), m);
        }
    }
    QueryGraph::new(file.into_graph()?, min_mult)
}

#[derive(Serialize, Deserialize)]
struct GroupRecord {
    nodes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct SgiSetFile {
    #[serde(rename = "type")]
    goi_type: String,
    groups: Vec<GroupRecord>,
}

pub fn sgi_set_to_json(set: &SgiSet) -> String {
    let file = SgiSetFile {
        goi_type: set.goi_type.clone(),
        groups: set
            .iter()
            .map(|s| GroupRecord {
                nodes: s.nodes().iter().map(|n| n.to_string()).collect(),
                edges: Some(s.edges().iter().map(|e| e.to_string()).collect()),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("sgi set serializes");
    out.push('\n');
    out
}

/// Load a subgraph set in the context of its parent graph. Groups without
/// an `edges` list are node-induced.
pub fn sgi_set_from_json(text: &str, g: &Multigraph) -> Result<SgiSet> {
    let file: SgiSetFile = serde_json::from_str(text)?;
    let mut members = Vec::with_capacity(file.groups.len());
    for group in file.groups {
        let nodes: Vec<crate::graph::NodeId> = group.nodes.into_iter().map(Into::into).collect();
        let member = match group.edges {
            Some(edge_ids) => {
                let ids: Vec<EdgeId> = edge_ids.into_iter().map(Into::into).collect();
                g.subgraph(nodes.iter(), ids.iter())?
            }
            None => g.induced_subgraph(nodes.iter())?,
        };
        members.push(member);
    }
    Ok(SgiSet::new(file.goi_type, members))
}

/// Load a subgraph set without a parent graph: node sets are taken as-is
/// and edge lists are ignored. Enough for evaluation, which compares node
/// sets only.
pub fn sgi_set_from_json_nodes_only(text: &str) -> Result<SgiSet> {
    let file: SgiSetFile = serde_json::from_str(text)?;
    let members = file
        .groups
        .into_iter()
        .map(|group| Subgraph::from_node_ids(group.nodes))
        .collect();
    Ok(SgiSet::new(file.goi_type, members))
}
