//! Multigraph data model: attributed nodes, parallel attributed edges,
//! subgraph views, and connected components.
//!
//! Graphs are immutable after construction. Anything that looks like a
//! mutation (`retain`, pruning) builds a new graph, so shared references
//! can be read concurrently without synchronization. Edges are undirected;
//! if the source data is directed, keep the direction in an edge attribute.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// Stable opaque node identifier, unique within a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(String);

impl NodeId {
    pub fn new(id: impl Into<String>) -> Self {
        NodeId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for NodeId {
    fn from(s: &str) -> Self {
        NodeId(s.to_owned())
    }
}

impl From<String> for NodeId {
    fn from(s: String) -> Self {
        NodeId(s)
    }
}

/// Stable opaque edge identifier, unique within a graph.
///
/// Parallel edges are first-class objects with distinct ids; they are never
/// collapsed into weights, because pruning must be able to remove one copy
/// of a parallel bundle while keeping the others.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(String);

impl EdgeId {
    pub fn new(id: impl Into<String>) -> Self {
        EdgeId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for EdgeId {
    fn from(s: &str) -> Self {
        EdgeId(s.to_owned())
    }
}

impl From<String> for EdgeId {
    fn from(s: String) -> Self {
        EdgeId(s)
    }
}

/// Scalar attribute value attached to a node or an edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AttrValue {
    Null,
    Bool(bool),
    Number(f64),
    Text(String),
}

impl AttrValue {
    /// Numeric view: numbers as-is, booleans as 0/1, text and null as `None`.
    pub fn as_number(&self) -> Option<f64> {
        match self {
            AttrValue::Number(x) => Some(*x),
            AttrValue::Bool(b) => Some(if *b { 1.0 } else { 0.0 }),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            AttrValue::Text(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_null(&self) -> bool {
        matches!(self, AttrValue::Null)
    }
}

impl From<f64> for AttrValue {
    fn from(x: f64) -> Self {
        AttrValue::Number(x)
    }
}

impl From<&str> for AttrValue {
    fn from(s: &str) -> Self {
        AttrValue::Text(s.to_owned())
    }
}

impl From<bool> for AttrValue {
    fn from(b: bool) -> Self {
        AttrValue::Bool(b)
    }
}

pub type AttrMap = BTreeMap<String, AttrValue>;

/// One transaction: an undirected attributed edge between two nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub src: NodeId,
    pub dst: NodeId,
    pub attrs: AttrMap,
}

impl Edge {
    /// The endpoint opposite to `v`, or `None` if `v` is not an endpoint.
    pub fn other(&self, v: &NodeId) -> Option<&NodeId> {
        if &self.src == v {
            Some(&self.dst)
        } else if &self.dst == v {
            Some(&self.src)
        } else {
            None
        }
    }
}

/// Node record used when building a graph.
#[derive(Debug, Clone)]
pub struct NodeRecord {
    pub id: NodeId,
    pub attrs: AttrMap,
}

impl NodeRecord {
    pub fn new(id: impl Into<NodeId>) -> Self {
        NodeRecord {
            id: id.into(),
            attrs: AttrMap::new(),
        }
    }

    pub fn with_attrs(id: impl Into<NodeId>, attrs: AttrMap) -> Self {
        NodeRecord {
            id: id.into(),
            attrs,
        }
    }
}

/// Edge record used when building a graph. A missing id is assigned from the
/// record position (`e0`, `e1`, ...), so parallel records stay distinct.
#[derive(Debug, Clone)]
pub struct EdgeRecord {
    pub id: Option<EdgeId>,
    pub src: NodeId,
    pub dst: NodeId,
    pub attrs: AttrMap,
}

impl EdgeRecord {
    pub fn new(src: impl Into<NodeId>, dst: impl Into<NodeId>) -> Self {
        EdgeRecord {
            id: None,
            src: src.into(),
            dst: dst.into(),
            attrs: AttrMap::new(),
        }
    }

    pub fn with_attrs(src: impl Into<NodeId>, dst: impl Into<NodeId>, attrs: AttrMap) -> Self {
        EdgeRecord {
            id: None,
            src: src.into(),
            dst: dst.into(),
            attrs,
        }
    }

    pub fn id(mut self, id: impl Into<EdgeId>) -> Self {
        self.id = Some(id.into());
        self
    }
}

/// Undirected multigraph with attributed nodes and parallel attributed edges.
///
/// Nodes are kept sorted by id and edges in record order, so every derived
/// ordering (components, candidates, serialized files) is reproducible.
/// Attribute keys are normalized to a per-graph schema: every node carries
/// the union of node keys (missing values become null), and likewise for
/// edges.
#[derive(Debug, Clone)]
pub struct Multigraph {
    node_ids: Vec<NodeId>,
    node_attrs: Vec<AttrMap>,
    edges: Vec<Edge>,
    node_index: HashMap<NodeId, usize>,
    edge_index: HashMap<EdgeId, usize>,
    /// Per node: (neighbor index, edge index), one entry per parallel copy.
    adjacency: Vec<Vec<(usize, usize)>>,
    /// Per node: sorted distinct neighbor indices.
    neighbor_sets: Vec<Vec<usize>>,
    /// Multiplicity per unordered endpoint pair, keyed by (min, max).
    pair_multiplicity: HashMap<(usize, usize), u32>,
    node_attr_keys: Vec<String>,
    edge_attr_keys: Vec<String>,
}

impl Multigraph {
    /// Build a graph from node and edge records.
    ///
    /// Fails on duplicate ids, self-loops, and edges whose endpoints are not
    /// among the node records (the offending record is named in the error).
    pub fn build(nodes: Vec<NodeRecord>, edges: Vec<EdgeRecord>) -> Result<Self> {
        let mut node_records = nodes;
        node_records.sort_by(|a, b| a.id.cmp(&b.id));

        let mut node_index = HashMap::with_capacity(node_records.len());
        for (i, rec) in node_records.iter().enumerate() {
            if node_index.insert(rec.id.clone(), i).is_some() {
                return Err(Error::DuplicateNode(rec.id.to_string()));
            }
        }

        let mut node_attr_keys: BTreeSet<String> = BTreeSet::new();
        for rec in &node_records {
            node_attr_keys.extend(rec.attrs.keys().cloned());
        }
        let mut edge_attr_keys: BTreeSet<String> = BTreeSet::new();
        for rec in &edges {
            edge_attr_keys.extend(rec.attrs.keys().cloned());
        }

        let mut built_edges = Vec::with_capacity(edges.len());
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (i, rec) in edges.into_iter().enumerate() {
            for endpoint in [&rec.src, &rec.dst] {
                if !node_index.contains_key(endpoint) {
                    return Err(Error::DanglingEndpoint {
                        record: i,
                        src: rec.src.to_string(),
                        dst: rec.dst.to_string(),
                        missing: endpoint.to_string(),
                    });
                }
            }
            if rec.src == rec.dst {
                return Err(Error::SelfLoop(rec.src.to_string()));
            }
            let id = rec.id.unwrap_or_else(|| EdgeId(format!("e{i}")));
            if edge_index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateEdge(id.to_string()));
            }
            let mut attrs = rec.attrs;
            for key in &edge_attr_keys {
                attrs.entry(key.clone()).or_insert(AttrValue::Null);
            }
            built_edges.push(Edge {
                id,
                src: rec.src,
                dst: rec.dst,
                attrs,
            });
        }

        let mut node_ids = Vec::with_capacity(node_records.len());
        let mut node_attrs = Vec::with_capacity(node_records.len());
        for rec in node_records {
            let mut attrs = rec.attrs;
            for key in &node_attr_keys {
                attrs.entry(key.clone()).or_insert(AttrValue::Null);
            }
            node_ids.push(rec.id);
            node_attrs.push(attrs);
        }

        let mut adjacency = vec![Vec::new(); node_ids.len()];
        let mut pair_multiplicity: HashMap<(usize, usize), u32> = HashMap::new();
        for (ei, edge) in built_edges.iter().enumerate() {
            let a = node_index[&edge.src];
            let b = node_index[&edge.dst];
            adjacency[a].push((b, ei));
            adjacency[b].push((a, ei));
            *pair_multiplicity.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        let neighbor_sets = adjacency
            .iter()
            .map(|adj| {
                let mut ns: Vec<usize> = adj.iter().map(|&(n, _)| n).collect();
                ns.dedup();
                ns
            })
            .collect();

        Ok(Multigraph {
            node_ids,
            node_attrs,
            edges: built_edges,
            node_index,
            edge_index,
            adjacency,
            neighbor_sets,
            pair_multiplicity,
            node_attr_keys: node_attr_keys.into_iter().collect(),
            edge_attr_keys: edge_attr_keys.into_iter().collect(),
        })
    }

    pub fn empty() -> Self {
        Multigraph::build(Vec::new(), Vec::new()).expect("empty graph")
    }

    pub fn node_count(&self) -> usize {
        self.node_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Node ids in sorted order.
    pub fn node_ids(&self) -> &[NodeId] {
        &self.node_ids
    }

    /// Edges in record order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_node(&self, id: &NodeId) -> bool {
        self.node_index.contains_key(id)
    }

    pub fn contains_edge(&self, id: &EdgeId) -> bool {
        self.edge_index.contains_key(id)
    }

    pub fn node_attrs(&self, id: &NodeId) -> Option<&AttrMap> {
        self.node_index.get(id).map(|&i| &self.node_attrs[i])
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Edge> {
        self.edge_index.get(id).map(|&i| &self.edges[i])
    }

    /// Attribute keys present on nodes (the per-graph node schema).
    pub fn node_attr_keys(&self) -> &[String] {
        &self.node_attr_keys
    }

    /// Attribute keys present on edges (the per-graph edge schema).
    pub fn edge_attr_keys(&self) -> &[String] {
        &self.edge_attr_keys
    }

    /// Degree counting every parallel copy.
    pub fn degree(&self, id: &NodeId) -> Option<usize> {
        self.node_index.get(id).map(|&i| self.adjacency[i].len())
    }

    /// Distinct neighbors of a node, in sorted id order.
    pub fn neighbors(&self, id: &NodeId) -> Option<Vec<&NodeId>> {
        self.node_index.get(id).map(|&i| {
            self.neighbor_sets[i]
                .iter()
                .map(|&n| &self.node_ids[n])
                .collect()
        })
    }

    /// All edges incident to a node, one per parallel copy.
    pub fn incident_edges(&self, id: &NodeId) -> Option<Vec<&Edge>> {
        self.node_index.get(id).map(|&i| {
            self.adjacency[i]
                .iter()
                .map(|&(_, e)| &self.edges[e])
                .collect()
        })
    }

    /// Number of parallel edges between two nodes.
    pub fn multiplicity(&self, a: &NodeId, b: &NodeId) -> u32 {
        match (self.node_index.get(a), self.node_index.get(b)) {
            (Some(&ia), Some(&ib)) => self.pair_mult_idx(ia, ib),
            _ => 0,
        }
    }

    pub(crate) fn require_node(&self, id: &NodeId) -> Result<usize> {
        self.node_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    pub(crate) fn require_edge(&self, id: &EdgeId) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub(crate) fn node_idx(&self, id: &NodeId) -> Option<usize> {
        self.node_index.get(id).copied()
    }

    pub(crate) fn node_id_at(&self, idx: usize) -> &NodeId {
        &self.node_ids[idx]
    }

    pub(crate) fn node_attrs_at(&self, idx: usize) -> &AttrMap {
        &self.node_attrs[idx]
    }

    pub(crate) fn adjacency_at(&self, idx: usize) -> &[(usize, usize)] {
        &self.adjacency[idx]
    }

    pub(crate) fn neighbor_set_at(&self, idx: usize) -> &[usize] {
        &self.neighbor_sets[idx]
    }

    pub(crate) fn edge_at(&self, idx: usize) -> &Edge {
        &self.edges[idx]
    }

    pub(crate) fn pair_mult_idx(&self, a: usize, b: usize) -> u32 {
        self.pair_multiplicity
            .get(&(a.min(b), a.max(b)))
            .copied()
            .unwrap_or(0)
    }

    pub(crate) fn simple_adjacent_idx(&self, a: usize, b: usize) -> bool {
        self.pair_mult_idx(a, b) > 0
    }

    /// Node-induced subgraph: the given nodes plus every edge (all parallel
    /// copies) with both endpoints inside the set.
    pub fn induced_subgraph<'a, I>(&self, nodes: I) -> Result<Subgraph>
    where
        I: IntoIterator<Item = &'a NodeId>,
    {
        let mut idx_set = BTreeSet::new();
        let mut node_set = BTreeSet::new();
        for id in nodes {
            idx_set.insert(self.require_node(id)?);
            node_set.insert(id.clone());
        }
        let mut edge_set = BTreeSet::new();
        for &i in &idx_set {
            for &(n, e) in &self.adjacency[i] {
                if n >= i && idx_set.contains(&n) {
                    edge_set.insert(self.edges[e].id.clone());
                }
            }
        }
        Ok(Subgraph {
            nodes: node_set,
            edges: edge_set,
        })
    }

    /// Subgraph with an explicit edge subset. Every edge must exist and have
    /// both endpoints inside the node set.
    pub fn subgraph<'a, 'b, NI, EI>(&self, nodes: NI, edges: EI) -> Result<Subgraph>
    where
        NI: IntoIterator<Item = &'a NodeId>,
        EI: IntoIterator<Item = &'b EdgeId>,
    {
        let mut node_set = BTreeSet::new();
        for id in nodes {
            self.require_node(id)?;
            node_set.insert(id.clone());
        }
        let mut edge_set = BTreeSet::new();
        for id in edges {
            let e = &self.edges[self.require_edge(id)?];
            if !node_set.contains(&e.src) || !node_set.contains(&e.dst) {
                return Err(Error::NotASubgraph(format!(
                    "edge `{}` has an endpoint outside the node set",
                    e.id
                )));
            }
            edge_set.insert(id.clone());
        }
        Ok(Subgraph {
            nodes: node_set,
            edges: edge_set,
        })
    }

    /// Connected components as node-induced subgraphs, ordered by their
    /// smallest contained node id. Components partition the node set.
    pub fn connected_components(&self) -> Vec<Subgraph> {
        let n = self.node_count();
        let mut uf = UnionFind::new(n);
        for edge in &self.edges {
            let a = self.node_index[&edge.src];
            let b = self.node_index[&edge.dst];
            uf.union(a, b);
        }
        // Nodes are sorted by id, so grouping by first-seen root orders
        // components by smallest member.
        let mut root_order: HashMap<usize, usize> = HashMap::new();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let root = uf.find(i);
            let slot = *root_order.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[slot].push(i);
        }
        groups
            .into_iter()
            .map(|members| {
                self.induced_subgraph(members.iter().map(|&i| &self.node_ids[i]))
                    .expect("component nodes exist")
            })
            .collect()
    }

    /// Check that a subgraph refers only to elements of this graph and that
    /// its edges stay inside its node set.
    pub fn validate_subgraph(&self, s: &Subgraph) -> Result<()> {
        for id in &s.nodes {
            self.require_node(id)?;
        }
        for id in &s.edges {
            let e = &self.edges[self.require_edge(id)?];
            if !s.nodes.contains(&e.src) || !s.nodes.contains(&e.dst) {
                return Err(Error::NotASubgraph(format!(
                    "edge `{}` has an endpoint outside the node set",
                    e.id
                )));
            }
        }
        Ok(())
    }

    /// New graph without the given nodes and edges. Edges incident to a
    /// removed node are dropped as well. Unknown ids are ignored.
    pub fn remove(&self, nodes: &BTreeSet<NodeId>, edges: &BTreeSet<EdgeId>) -> Multigraph {
        let node_records = self
            .node_ids
            .iter()
            .zip(&self.node_attrs)
            .filter(|(id, _)| !nodes.contains(id))
            .map(|(id, attrs)| NodeRecord {
                id: id.clone(),
                attrs: attrs.clone(),
            })
            .collect();
        let edge_records = self
            .edges
            .iter()
            .filter(|e| {
                !edges.contains(&e.id) && !nodes.contains(&e.src) && !nodes.contains(&e.dst)
            })
            .map(|e| EdgeRecord {
                id: Some(e.id.clone()),
                src: e.src.clone(),
                dst: e.dst.clone(),
                attrs: e.attrs.clone(),
            })
            .collect();
        Multigraph::build(node_records, edge_records).expect("subset of a valid graph")
    }
}

/// A view into a parent graph: a node set plus an edge subset whose
/// endpoints all lie inside the node set. One subgraph of interest, one
/// prediction, or one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    nodes: BTreeSet<NodeId>,
    edges: BTreeSet<EdgeId>,
}

impl Subgraph {
    /// Subgraph from bare node ids with no edges. Useful when only the node
    /// set matters (evaluation compares node sets).
    pub fn from_node_ids<I, T>(ids: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<NodeId>,
    {
        Subgraph {
            nodes: ids.into_iter().map(Into::into).collect(),
            edges: BTreeSet::new(),
        }
    }

    pub fn nodes(&self) -> &BTreeSet<NodeId> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains_node(&self, id: &NodeId) -> bool {
        self.nodes.contains(id)
    }

    /// Sorted node ids; the canonical form used for ordering and dedup.
    pub fn sorted_node_ids(&self) -> Vec<NodeId> {
        self.nodes.iter().cloned().collect()
    }
}

/// A collection of possibly overlapping subgraphs of one group-of-interest
/// type, all over the same parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SgiSet {
    pub goi_type: String,
    pub members: Vec<Subgraph>,
}

impl SgiSet {
    pub fn new(goi_type: impl Into<String>, members: Vec<Subgraph>) -> Self {
        SgiSet {
            goi_type: goi_type.into(),
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgraph> {
        self.members.iter()
    }

    pub fn validate_against(&self, g: &Multigraph) -> Result<()> {
        for member in &self.members {
            g.validate_subgraph(member)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn build_empty_graph() {
        let g = Multigraph::empty();
        assert_eq!(g.node_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert!(g.connected_components().is_empty());
    }

    #[test]
    fn parallel_edges_are_preserved() {
        let g = fixtures::graph_from_edges(&[("A", "B"), ("A", "B"), ("A", "B")]);
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.multiplicity(&"A".into(), &"B".into()), 3);
        assert_eq!(g.degree(&"A".into()), Some(3));
    }

    #[test]
    fn dangling_endpoint_names_the_record() {
        let err = Multigraph::build(vec![NodeRecord::new("A")], vec![EdgeRecord::new("A", "B")])
            .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("record 0"), "{msg}");
        assert!(msg.contains('B'), "{msg}");
    }

    #[test]
    fn self_loops_are_rejected() {
        let err = Multigraph::build(vec![NodeRecord::new("A")], vec![EdgeRecord::new("A", "A")])
            .unwrap_err();
        assert!(matches!(err, Error::SelfLoop(_)));
    }

    #[test]
    fn induced_subgraph_takes_all_parallel_copies() {
        let g = fixtures::transaction_network();
        let s = g.induced_subgraph(&["C".into(), "E".into()]).unwrap();
        assert_eq!(s.node_count(), 2);
        assert_eq!(s.edge_count(), 2);
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let g = fixtures::triangle();
        let all = g.induced_subgraph(g.node_ids()).unwrap();
        assert_eq!(all.edge_count(), g.edge_count());
        let empty = g.induced_subgraph(std::iter::empty::<&NodeId>()).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn induced_subgraph_unknown_node_errors() {
        let g = fixtures::triangle();
        assert!(g.induced_subgraph(&["zz".into()]).is_err());
    }

    #[test]
    fn components_of_disjoint_triangles() {
        let g = fixtures::graph_from_edges(&[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("x", "y"),
            ("y", "z"),
            ("z", "x"),
        ]);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.node_count() == 3));
        // Ordered by smallest contained node id.
        assert!(comps[0].contains_node(&"a".into()));
    }

    #[test]
    fn components_partition_nodes_and_are_idempotent() {
        let g = fixtures::transaction_network();
        let comps = g.connected_components();
        let total: usize = comps
            .iter()
            .map(|c| c.node_count())
            .collect::<Vec<_>>()
            .iter()
            .sum();
        assert_eq!(total, g.node_count());
        for comp in &comps {
            let sub = g.remove(
                &g.node_ids()
                    .iter()
                    .filter(|id| !comp.contains_node(id))
                    .cloned()
                    .collect(),
                &BTreeSet::new(),
            );
            let inner = sub.connected_components();
            assert_eq!(inner.len(), 1);
            assert_eq!(inner[0].nodes(), comp.nodes());
        }
    }

    #[test]
    fn bridge_removal_splits_the_groups() {
        let g = fixtures::transaction_network();
        // Keep only the sample group and its green neighbor group, then cut
        // the parallel bridge between C and E.
        let keep: BTreeSet<NodeId> = ["A", "B", "C", "D", "E", "F", "G", "H", "I"]
            .iter()
            .map(|&s| NodeId::from(s))
            .collect();
        let drop_nodes: BTreeSet<NodeId> = g
            .node_ids()
            .iter()
            .filter(|id| !keep.contains(id))
            .cloned()
            .collect();
        let bridge: BTreeSet<EdgeId> = g
            .edges()
            .iter()
            .filter(|e| {
                let pair = [e.src.as_str(), e.dst.as_str()];
                pair.contains(&"C") && pair.contains(&"E")
            })
            .map(|e| e.id.clone())
            .collect();
        assert_eq!(bridge.len(), 2);
        let cut = g.remove(&drop_nodes, &bridge);
        let comps = cut.connected_components();
        let node_sets: Vec<Vec<&str>> = comps
            .iter()
            .map(|c| c.nodes().iter().map(|n| n.as_str()).collect())
            .collect();
        assert!(node_sets.contains(&vec!["A", "B", "C", "D"]));
        assert!(node_sets.contains(&vec!["E", "F", "G", "H", "I"]));
    }

    #[test]
    fn subgraph_edges_must_stay_inside_nodes() {
        let g = fixtures::triangle();
        let edge_id = g.edges()[0].id.clone();
        let inside: Vec<NodeId> = vec![g.edges()[0].src.clone(), g.edges()[0].dst.clone()];
        assert!(g.subgraph(inside.iter(), [&edge_id]).is_ok());
        let outside = [g.node_ids()[2].clone()];
        assert!(g.subgraph(outside.iter(), [&edge_id]).is_err());
    }
}
