//! Fixed-size feature vectors for subgraphs, nodes, and edges, plus the
//! cosine distance used by every similarity check.
//!
//! Degree and multiplicity features count parallel edges; clustering,
//! transitivity, and common-neighbor counts are computed on the simple-graph
//! projection. Degenerate statistics fall back to 0 so vectors stay finite
//! and fixed-size: path statistics over no connected pairs, clustering of
//! nodes with fewer than two distinct neighbors, and assortativity with zero
//! degree variance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{AttrMap, AttrValue, EdgeId, Multigraph, NodeId, Subgraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeatureLevel {
    Subgraph,
    Node,
    Edge,
}

impl std::fmt::Display for FeatureLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FeatureLevel::Subgraph => "subgraph",
            FeatureLevel::Node => "node",
            FeatureLevel::Edge => "edge",
        };
        f.write_str(s)
    }
}

/// One structural metric. Each metric belongs to exactly one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    // subgraph level
    NodeCount,
    EdgeCount,
    MinDegree,
    MaxDegree,
    MeanDegree,
    MinClustering,
    MaxClustering,
    MeanClustering,
    MinPathLength,
    MaxPathLength,
    MeanPathLength,
    Transitivity,
    Assortativity,
    // node level
    Degree,
    NeighborCount,
    MeanNeighborDegree,
    MaxNeighborDegree,
    Clustering,
    MeanEdgeMultiplicity,
    // edge level
    Multiplicity,
    MinEndpointDegree,
    MaxEndpointDegree,
    CommonNeighbors,
}

impl Metric {
    pub fn level(self) -> FeatureLevel {
        use Metric::*;
        match self {
            NodeCount | EdgeCount | MinDegree | MaxDegree | MeanDegree | MinClustering
            | MaxClustering | MeanClustering | MinPathLength | MaxPathLength | MeanPathLength
            | Transitivity | Assortativity => FeatureLevel::Subgraph,
            Degree | NeighborCount | MeanNeighborDegree | MaxNeighborDegree | Clustering
            | MeanEdgeMultiplicity => FeatureLevel::Node,
            Multiplicity | MinEndpointDegree | MaxEndpointDegree | CommonNeighbors => {
                FeatureLevel::Edge
            }
        }
    }

    pub fn name(self) -> &'static str {
        use Metric::*;
        match self {
            NodeCount => "node_count",
            EdgeCount => "edge_count",
            MinDegree => "min_degree",
            MaxDegree => "max_degree",
            MeanDegree => "mean_degree",
            MinClustering => "min_clustering",
            MaxClustering => "max_clustering",
            MeanClustering => "mean_clustering",
            MinPathLength => "min_path_length",
            MaxPathLength => "max_path_length",
            MeanPathLength => "mean_path_length",
            Transitivity => "transitivity",
            Assortativity => "assortativity",
            Degree => "degree",
            NeighborCount => "neighbor_count",
            MeanNeighborDegree => "mean_neighbor_degree",
            MaxNeighborDegree => "max_neighbor_degree",
            Clustering => "clustering",
            MeanEdgeMultiplicity => "mean_edge_multiplicity",
            Multiplicity => "multiplicity",
            MinEndpointDegree => "min_endpoint_degree",
            MaxEndpointDegree => "max_endpoint_degree",
            CommonNeighbors => "common_neighbors",
        }
    }

    /// The full metric list for a level, in contract order.
    pub fn defaults_for(level: FeatureLevel) -> Vec<Metric> {
        use Metric::*;
        match level {
            FeatureLevel::Subgraph => vec![
                NodeCount,
                EdgeCount,
                MinDegree,
                MaxDegree,
                MeanDegree,
                MinClustering,
                MaxClustering,
                MeanClustering,
                MinPathLength,
                MaxPathLength,
                MeanPathLength,
                Transitivity,
                Assortativity,
            ],
            FeatureLevel::Node => vec![
                Degree,
                NeighborCount,
                MeanNeighborDegree,
                MaxNeighborDegree,
                Clustering,
                MeanEdgeMultiplicity,
            ],
            FeatureLevel::Edge => vec![
                Multiplicity,
                MinEndpointDegree,
                MaxEndpointDegree,
                CommonNeighbors,
            ],
        }
    }
}

/// How one attribute key is turned into vector entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttrEncoding {
    /// One dimension; numbers as-is, booleans as 0/1, null as 0.
    Numeric,
    /// One dimension per vocabulary entry. The vocabulary is frozen when the
    /// schema is built; unseen categories encode as an all-zero block.
    Categorical(Vec<String>),
}

impl AttrEncoding {
    fn width(&self) -> usize {
        match self {
            AttrEncoding::Numeric => 1,
            AttrEncoding::Categorical(vocab) => vocab.len().max(1),
        }
    }
}

/// Declares which features a vector contains: a level, an ordered metric
/// list, attribute keys with frozen encodings, and a standardization flag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSchema {
    level: FeatureLevel,
    metrics: Vec<Metric>,
    attrs: Vec<(String, AttrEncoding)>,
    standardize: bool,
}

impl FeatureSchema {
    /// Schema with explicit metrics and attribute keys. Categorical
    /// vocabularies are collected from `graph` and frozen.
    pub fn new(
        level: FeatureLevel,
        metrics: Vec<Metric>,
        attr_keys: &[String],
        standardize: bool,
        graph: &Multigraph,
    ) -> Result<Self> {
        for m in &metrics {
            if m.level() != level {
                return Err(Error::InvalidSchema(format!(
                    "metric `{}` is a {} metric, schema level is {}",
                    m.name(),
                    m.level(),
                    level
                )));
            }
        }
        let mut attrs = Vec::with_capacity(attr_keys.len());
        for key in attr_keys {
            attrs.push((key.clone(), infer_encoding(graph, level, key)?));
        }
        if metrics.is_empty() && attrs.is_empty() {
            return Err(Error::InvalidSchema(
                "schema has no dimensions (no metrics, no attribute keys)".into(),
            ));
        }
        Ok(FeatureSchema {
            level,
            metrics,
            attrs,
            standardize,
        })
    }

    /// Default metrics for the level, no attributes.
    pub fn structural(level: FeatureLevel) -> Self {
        FeatureSchema {
            level,
            metrics: Metric::defaults_for(level),
            attrs: Vec::new(),
            standardize: false,
        }
    }

    /// No metrics; only the graph's attribute keys for the level.
    pub fn attributes_only(level: FeatureLevel, graph: &Multigraph) -> Result<Self> {
        FeatureSchema::new(
            level,
            Vec::new(),
            &attr_keys_for(level, graph),
            false,
            graph,
        )
    }

    /// Default metrics plus all of the graph's attribute keys for the level.
    pub fn full(level: FeatureLevel, graph: &Multigraph) -> Result<Self> {
        FeatureSchema::new(
            level,
            Metric::defaults_for(level),
            &attr_keys_for(level, graph),
            false,
            graph,
        )
    }

    pub fn with_standardize(mut self, standardize: bool) -> Self {
        self.standardize = standardize;
        self
    }

    pub fn level(&self) -> FeatureLevel {
        self.level
    }

    pub fn standardize(&self) -> bool {
        self.standardize
    }

    pub fn metrics(&self) -> &[Metric] {
        &self.metrics
    }

    pub fn dimension(&self) -> usize {
        self.metrics.len() + self.attrs.iter().map(|(_, e)| e.width()).sum::<usize>()
    }

    /// One name per vector entry, in order.
    pub fn dimension_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.metrics.iter().map(|m| m.name().to_owned()).collect();
        for (key, enc) in &self.attrs {
            match enc {
                AttrEncoding::Numeric => names.push(format!("attr:{key}")),
                AttrEncoding::Categorical(vocab) => {
                    if vocab.is_empty() {
                        names.push(format!("attr:{key}"));
                    }
                    for v in vocab {
                        names.push(format!("attr:{key}={v}"));
                    }
                }
            }
        }
        names
    }

    /// Canonical identity string; two vectors are comparable iff their
    /// schema ids match.
    pub fn id(&self) -> String {
        let metrics: Vec<&str> = self.metrics.iter().map(|m| m.name()).collect();
        let attrs: Vec<String> = self
            .attrs
            .iter()
            .map(|(k, e)| match e {
                AttrEncoding::Numeric => format!("{k}:num"),
                AttrEncoding::Categorical(vocab) => format!("{k}:cat[{}]", vocab.join(",")),
            })
            .collect();
        format!(
            "{}|{}|{}|std={}",
            self.level,
            metrics.join(","),
            attrs.join(";"),
            self.standardize
        )
    }

    fn encode_attrs(&self, attrs: &AttrMap, out: &mut Vec<f64>) {
        for (key, enc) in &self.attrs {
            let value = attrs.get(key);
            match enc {
                AttrEncoding::Numeric => {
                    out.push(value.and_then(AttrValue::as_number).unwrap_or(0.0));
                }
                AttrEncoding::Categorical(vocab) => {
                    if vocab.is_empty() {
                        out.push(0.0);
                        continue;
                    }
                    let text = value.and_then(AttrValue::as_text);
                    for entry in vocab {
                        out.push(if text == Some(entry.as_str()) {
                            1.0
                        } else {
                            0.0
                        });
                    }
                }
            }
        }
    }

    fn require_level(&self, level: FeatureLevel) -> Result<()> {
        if self.level != level {
            return Err(Error::InvalidSchema(format!(
                "schema level is {}, operation needs {}",
                self.level, level
            )));
        }
        Ok(())
    }
}

fn attr_keys_for(level: FeatureLevel, graph: &Multigraph) -> Vec<String> {
    match level {
        FeatureLevel::Edge => graph.edge_attr_keys().to_vec(),
        _ => graph.node_attr_keys().to_vec(),
    }
}

fn infer_encoding(graph: &Multigraph, level: FeatureLevel, key: &str) -> Result<AttrEncoding> {
    let mut texts: Vec<String> = Vec::new();
    let mut numeric = false;
    let mut scan = |value: &AttrValue| match value {
        AttrValue::Text(s) => {
            if !texts.contains(s) {
                texts.push(s.clone());
            }
        }
        AttrValue::Number(_) | AttrValue::Bool(_) => numeric = true,
        AttrValue::Null => {}
    };
    match level {
        FeatureLevel::Edge => {
            for edge in graph.edges() {
                if let Some(v) = edge.attrs.get(key) {
                    scan(v);
                }
            }
        }
        _ => {
            for id in graph.node_ids() {
                if let Some(v) = graph.node_attrs(id).and_then(|a| a.get(key)) {
                    scan(v);
                }
            }
        }
    }
    if !texts.is_empty() && numeric {
        return Err(Error::InvalidSchema(format!(
            "attribute `{key}` mixes text and numeric values"
        )));
    }
    if texts.is_empty() {
        Ok(AttrEncoding::Numeric)
    } else {
        texts.sort_unstable();
        Ok(AttrEncoding::Categorical(texts))
    }
}

/// Fixed-length vector of finite reals produced by a schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub schema_id: String,
    pub values: Vec<f64>,
}

impl FeatureVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Per-dimension z-scoring fit on a set of reference vectors (typically the
/// training samples) and applied identically to every compared vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Standardizer {
    schema_id: String,
    means: Vec<f64>,
    stds: Vec<f64>,
}

impl Standardizer {
    pub fn fit(vectors: &[FeatureVector]) -> Result<Self> {
        let first = vectors.first().ok_or(Error::EmptySamples)?;
        let dim = first.len();
        for v in vectors {
            if v.schema_id != first.schema_id {
                return Err(Error::SchemaMismatch {
                    expected: first.schema_id.clone(),
                    actual: v.schema_id.clone(),
                });
            }
        }
        let n = vectors.len() as f64;
        let mut means = vec![0.0; dim];
        for v in vectors {
            for (m, x) in means.iter_mut().zip(&v.values) {
                *m += x / n;
            }
        }
        let mut stds = vec![0.0; dim];
        for v in vectors {
            for (s, (x, m)) in stds.iter_mut().zip(v.values.iter().zip(&means)) {
                *s += (x - m).powi(2) / n;
            }
        }
        for s in &mut stds {
            *s = s.sqrt();
        }
        Ok(Standardizer {
            schema_id: first.schema_id.clone(),
            means,
            stds,
        })
    }

    pub fn apply(&self, v: &FeatureVector) -> Result<FeatureVector> {
        if v.schema_id != self.schema_id {
            return Err(Error::SchemaMismatch {
                expected: self.schema_id.clone(),
                actual: v.schema_id.clone(),
            });
        }
        let values = v
            .values
            .iter()
            .zip(self.means.iter().zip(&self.stds))
            .map(|(x, (m, s))| if *s > 0.0 { (x - m) / s } else { 0.0 })
            .collect();
        Ok(FeatureVector {
            schema_id: v.schema_id.clone(),
            values,
        })
    }
}

/// Cosine distance `1 - a.b / (|a||b|)`, in `[0, 2]`.
///
/// Two zero vectors are at distance 0; a zero vector against a nonzero one
/// is at distance 1.
pub fn cosine_distance(a: &FeatureVector, b: &FeatureVector) -> Result<f64> {
    if a.schema_id != b.schema_id {
        return Err(Error::SchemaMismatch {
            expected: a.schema_id.clone(),
            actual: b.schema_id.clone(),
        });
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let dot: f64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum();
    let na2: f64 = a.values.iter().map(|x| x * x).sum();
    let nb2: f64 = b.values.iter().map(|x| x * x).sum();
    if na2 == 0.0 && nb2 == 0.0 {
        return Ok(0.0);
    }
    if na2 == 0.0 || nb2 == 0.0 {
        return Ok(1.0);
    }
    Ok((1.0 - dot / (na2 * nb2).sqrt()).clamp(0.0, 2.0))
}

/// Structure of one subgraph, indexed locally: degrees with multiplicity and
/// the simple-projection adjacency.
struct LocalView {
    /// Graph node index per local slot, sorted by node id.
    members: Vec<usize>,
    degree: Vec<usize>,
    /// Sorted distinct local neighbors per local slot.
    simple_adj: Vec<Vec<usize>>,
    /// (local a, local b, multiplicity) per distinct endpoint pair, a < b.
    simple_edges: Vec<(usize, usize, u32)>,
    edge_total: usize,
}

impl LocalView {
    fn build(g: &Multigraph, s: &Subgraph) -> Result<Self> {
        g.validate_subgraph(s)?;
        let members: Vec<usize> = s
            .nodes()
            .iter()
            .map(|id| g.node_idx(id).expect("validated"))
            .collect();
        let local: BTreeMap<usize, usize> = members
            .iter()
            .enumerate()
            .map(|(slot, &idx)| (idx, slot))
            .collect();
        let mut degree = vec![0usize; members.len()];
        let mut mult: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for id in s.edges() {
            let e = g.edge(id).expect("validated");
            let a = local[&g.node_idx(&e.src).expect("validated")];
            let b = local[&g.node_idx(&e.dst).expect("validated")];
            degree[a] += 1;
            degree[b] += 1;
            *mult.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        let mut simple_adj = vec![Vec::new(); members.len()];
        let mut simple_edges = Vec::with_capacity(mult.len());
        for (&(a, b), &m) in &mult {
            simple_adj[a].push(b);
            simple_adj[b].push(a);
            simple_edges.push((a, b, m));
        }
        for adj in &mut simple_adj {
            adj.sort_unstable();
        }
        Ok(LocalView {
            members,
            degree,
            simple_adj,
            simple_edges,
            edge_total: s.edge_count(),
        })
    }

    fn clustering(&self, v: usize) -> f64 {
        let neighbors = &self.simple_adj[v];
        let k = neighbors.len();
        if k < 2 {
            return 0.0;
        }
        let mut links = 0usize;
        for (i, &a) in neighbors.iter().enumerate() {
            for &b in &neighbors[i + 1..] {
                if self.simple_adj[a].binary_search(&b).is_ok() {
                    links += 1;
                }
            }
        }
        links as f64 / (k * (k - 1) / 2) as f64
    }

    /// Hop distances over connected unordered pairs, on the simple
    /// projection.
    fn path_lengths(&self) -> Vec<usize> {
        let n = self.members.len();
        let mut out = Vec::new();
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.simple_adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &d in &dist[start + 1..] {
                if d != usize::MAX {
                    out.push(d);
                }
            }
        }
        out
    }

    fn transitivity(&self) -> f64 {
        let mut triangles = 0usize;
        let mut triples = 0usize;
        for v in 0..self.members.len() {
            let k = self.simple_adj[v].len();
            triples += k * (k.saturating_sub(1)) / 2;
        }
        // Count each triangle once at its smallest vertex.
        for v in 0..self.members.len() {
            let neighbors = &self.simple_adj[v];
            for (i, &a) in neighbors.iter().enumerate() {
                if a < v {
                    continue;
                }
                for &b in &neighbors[i + 1..] {
                    if self.simple_adj[a].binary_search(&b).is_ok() {
                        triangles += 1;
                    }
                }
            }
        }
        if triples == 0 {
            0.0
        } else {
            3.0 * triangles as f64 / triples as f64
        }
    }

    /// Degree assortativity over the multigraph edge list: every parallel
    /// copy contributes one endpoint-degree sample.
    fn assortativity(&self) -> f64 {
        if self.simple_edges.is_empty() {
            return 0.0;
        }
        let mut m = 0.0;
        let mut sum_jk = 0.0;
        let mut sum_half = 0.0;
        let mut sum_sq_half = 0.0;
        for &(a, b, mult) in &self.simple_edges {
            let j = self.degree[a] as f64;
            let k = self.degree[b] as f64;
            let w = mult as f64;
            m += w;
            sum_jk += w * j * k;
            sum_half += w * 0.5 * (j + k);
            sum_sq_half += w * 0.5 * (j * j + k * k);
        }
        let mean = sum_half / m;
        let denom = sum_sq_half / m - mean * mean;
        if denom <= f64::EPSILON {
            return 0.0;
        }
        (sum_jk / m - mean * mean) / denom
    }
}

/// Feature vector for a subgraph in schema order: structural metrics first,
/// then the mean of the members' encoded node attributes.
pub fn subgraph_features(
    g: &Multigraph,
    s: &Subgraph,
    schema: &FeatureSchema,
) -> Result<FeatureVector> {
    schema.require_level(FeatureLevel::Subgraph)?;
    let view = LocalView::build(g, s)?;
    let n = view.members.len();

    let mut values = Vec::with_capacity(schema.dimension());
    let degree_stats = min_max_mean(view.degree.iter().map(|&d| d as f64));
    let clustering_stats = min_max_mean((0..n).map(|v| view.clustering(v)));
    let paths = view.path_lengths();
    let path_stats = min_max_mean(paths.iter().map(|&d| d as f64));

    for metric in schema.metrics() {
        let value = match metric {
            Metric::NodeCount => n as f64,
            Metric::EdgeCount => view.edge_total as f64,
            Metric::MinDegree => degree_stats.0,
            Metric::MaxDegree => degree_stats.1,
            Metric::MeanDegree => degree_stats.2,
            Metric::MinClustering => clustering_stats.0,
            Metric::MaxClustering => clustering_stats.1,
            Metric::MeanClustering => clustering_stats.2,
            Metric::MinPathLength => path_stats.0,
            Metric::MaxPathLength => path_stats.1,
            Metric::MeanPathLength => path_stats.2,
            Metric::Transitivity => view.transitivity(),
            Metric::Assortativity => view.assortativity(),
            _ => unreachable!("level checked"),
        };
        values.push(value);
    }

    if !schema.attrs.is_empty() {
        let mut attr_sum = vec![0.0; schema.dimension() - schema.metrics.len()];
        let mut block = Vec::with_capacity(attr_sum.len());
        for &idx in &view.members {
            block.clear();
            schema.encode_attrs(g.node_attrs_at(idx), &mut block);
            for (acc, x) in attr_sum.iter_mut().zip(&block) {
                *acc += x;
            }
        }
        if n > 0 {
            for acc in &mut attr_sum {
                *acc /= n as f64;
            }
        }
        values.extend(attr_sum);
    }

    debug_assert_eq!(values.len(), schema.dimension());
    debug_assert!(values.iter().all(|x| x.is_finite()));
    Ok(FeatureVector {
        schema_id: schema.id(),
        values,
    })
}

/// Feature vector for one node, computed in the context of the whole graph.
pub fn node_features(g: &Multigraph, v: &NodeId, schema: &FeatureSchema) -> Result<FeatureVector> {
    schema.require_level(FeatureLevel::Node)?;
    let idx = g.require_node(v)?;
    let degree = g.adjacency_at(idx).len();
    let neighbors = g.neighbor_set_at(idx);

    let mut values = Vec::with_capacity(schema.dimension());
    for metric in schema.metrics() {
        let value = match metric {
            Metric::Degree => degree as f64,
            Metric::NeighborCount => neighbors.len() as f64,
            Metric::MeanNeighborDegree => {
                if neighbors.is_empty() {
                    0.0
                } else {
                    neighbors
                        .iter()
                        .map(|&n| g.adjacency_at(n).len() as f64)
                        .sum::<f64>()
                        / neighbors.len() as f64
                }
            }
            Metric::MaxNeighborDegree => neighbors
                .iter()
                .map(|&n| g.adjacency_at(n).len() as f64)
                .fold(0.0, f64::max),
            Metric::Clustering => local_clustering(g, neighbors),
            Metric::MeanEdgeMultiplicity => {
                if neighbors.is_empty() {
                    0.0
                } else {
                    degree as f64 / neighbors.len() as f64
                }
            }
            _ => unreachable!("level checked"),
        };
        values.push(value);
    }
    schema.encode_attrs(g.node_attrs_at(idx), &mut values);

    debug_assert_eq!(values.len(), schema.dimension());
    Ok(FeatureVector {
        schema_id: schema.id(),
        values,
    })
}

/// Feature vector for one edge, computed in the context of the whole graph.
pub fn edge_features(g: &Multigraph, e: &EdgeId, schema: &FeatureSchema) -> Result<FeatureVector> {
    schema.require_level(FeatureLevel::Edge)?;
    let edge = g.edge_at(g.require_edge(e)?);
    let a = g.node_idx(&edge.src).expect("edge endpoints exist");
    let b = g.node_idx(&edge.dst).expect("edge endpoints exist");
    let deg_a = g.adjacency_at(a).len() as f64;
    let deg_b = g.adjacency_at(b).len() as f64;

    let mut values = Vec::with_capacity(schema.dimension());
    for metric in schema.metrics() {
        let value = match metric {
            Metric::Multiplicity => g.pair_mult_idx(a, b) as f64,
            Metric::MinEndpointDegree => deg_a.min(deg_b),
            Metric::MaxEndpointDegree => deg_a.max(deg_b),
            Metric::CommonNeighbors => {
                sorted_intersection_len(g.neighbor_set_at(a), g.neighbor_set_at(b)) as f64
            }
            _ => unreachable!("level checked"),
        };
        values.push(value);
    }
    schema.encode_attrs(&edge.attrs, &mut values);

    debug_assert_eq!(values.len(), schema.dimension());
    Ok(FeatureVector {
        schema_id: schema.id(),
        values,
    })
}

fn local_clustering(g: &Multigraph, neighbors: &[usize]) -> f64 {
    let k = neighbors.len();
    if k < 2 {
        return 0.0;
    }
    let mut links = 0usize;
    for (i, &a) in neighbors.iter().enumerate() {
        for &b in &neighbors[i + 1..] {
            if g.simple_adjacent_idx(a, b) {
                links += 1;
            }
        }
    }
    links as f64 / (k * (k - 1) / 2) as f64
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn min_max_mean(values: impl Iterator<Item = f64>) -> (f64, f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut count = 0usize;
    for x in values {
        min = min.min(x);
        max = max.max(x);
        sum += x;
        count += 1;
    }
    if count == 0 {
        (0.0, 0.0, 0.0)
    } else {
        (min, max, sum / count as f64)
    }
}
