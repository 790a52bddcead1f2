//! Synthetic transactional multigraphs with planted groups, providing the
//! ground truth and training samples that real datasets cannot supply at
//! desk scale.
//!
//! Planted groups are wired with a chosen motif, decorated with a context
//! neighborhood drawn from the background pool, and separated from the
//! background either by disjoint attribute values (separable mode) or by
//! noisy numeric attributes (noisy mode). Generation is fully deterministic
//! for a fixed seed.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::{cosine_distance, node_features, FeatureLevel, FeatureSchema};
use crate::graph::{AttrMap, AttrValue, EdgeRecord, Multigraph, NodeId, NodeRecord, SgiSet};

/// Shape of one planted group's internal transactions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupMotif {
    /// First member transacts with every other member.
    Hub,
    /// Every pair of members transacts.
    Clique,
    /// Members form a chain.
    Path,
}

/// Shape of the neighborhood decoration attached to a group, built from
/// background nodes. Groups with identical internal topology can then only
/// be told apart by their surroundings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContextMotif {
    /// One four-node block (a 4-clique) hanging off the first member.
    Square,
    /// Two triangles hanging off the first two members.
    Triangles,
}

impl ContextMotif {
    fn nodes_needed(self) -> usize {
        match self {
            ContextMotif::Square => 4,
            ContextMotif::Triangles => 6,
        }
    }
}

/// How group elements are separated from the background in attribute space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum AttributeMode {
    /// Group elements carry attribute values disjoint from the background;
    /// attribute-only features separate them perfectly.
    Separable,
    /// One shared categorical value and Gaussian-perturbed numeric scores.
    Noisy { sigma: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkConfig {
    pub background_nodes: usize,
    /// Background edges per background node; the edge count is
    /// `round(density * background_nodes)`, endpoints uniform over all
    /// nodes.
    pub background_edge_density: f64,
    pub groups: usize,
    /// Inclusive group size range.
    pub group_size: (usize, usize),
    pub motif: GroupMotif,
    pub context: ContextMotif,
    /// Share of each group's members reused from the previous group;
    /// every group after the first shares `round(fraction * size)` nodes.
    pub overlap_fraction: f64,
    /// Inclusive range of parallel transactions per group-internal edge.
    pub multiplicity: (u32, u32),
    pub attributes: AttributeMode,
    /// Number of truth subgraphs to hand out as training samples.
    pub training_samples: usize,
    pub seed: u64,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        BenchmarkConfig {
            background_nodes: 200,
            background_edge_density: 1.5,
            groups: 5,
            group_size: (4, 8),
            motif: GroupMotif::Clique,
            context: ContextMotif::Square,
            overlap_fraction: 0.0,
            multiplicity: (1, 3),
            attributes: AttributeMode::Separable,
            training_samples: 2,
            seed: 0,
        }
    }
}

impl BenchmarkConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.group_size;
        if self.groups > 0 && (lo < 2 || lo > hi) {
            return Err(Error::InvalidConfig(
                "group size range must satisfy 2 <= lo <= hi".into(),
            ));
        }
        if !(0.0..1.0).contains(&self.overlap_fraction) {
            return Err(Error::InvalidConfig(
                "overlap fraction must be in [0, 1)".into(),
            ));
        }
        if self.background_edge_density < 0.0 {
            return Err(Error::InvalidConfig("density must be >= 0".into()));
        }
        let (mlo, mhi) = self.multiplicity;
        if self.groups > 0 && (mlo < 1 || mlo > mhi) {
            return Err(Error::InvalidConfig(
                "multiplicity range must satisfy 1 <= lo <= hi".into(),
            ));
        }
        if let AttributeMode::Noisy { sigma } = self.attributes {
            if sigma < 0.0 {
                return Err(Error::InvalidConfig("sigma must be >= 0".into()));
            }
        }
        if self.groups > 0 && self.training_samples > self.groups {
            return Err(Error::InvalidConfig(
                "training sample count exceeds group count".into(),
            ));
        }
        let context_need = self.groups * self.context.nodes_needed();
        if context_need > self.background_nodes {
            return Err(Error::InvalidConfig(format!(
                "context decoration needs {context_need} background nodes, only {} available",
                self.background_nodes
            )));
        }
        if self.groups > 0 {
            let max_shared = (self.overlap_fraction * hi as f64).round() as usize;
            if max_shared >= lo {
                return Err(Error::InvalidConfig(
                    "overlap fraction too high for the group size range".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Generated graph plus its planted ground truth and training samples.
#[derive(Debug, Clone)]
pub struct Benchmark {
    pub graph: Multigraph,
    pub truth: SgiSet,
    pub samples: SgiSet,
}

struct AttrPainter {
    mode: AttributeMode,
}

impl AttrPainter {
    fn node(&self, member: bool, rng: &mut ChaCha8Rng) -> AttrMap {
        let mut attrs = AttrMap::new();
        match self.mode {
            AttributeMode::Separable => {
                attrs.insert(
                    "kind".into(),
                    AttrValue::from(if member { "goi" } else { "bg" }),
                );
                attrs.insert(
                    "score".into(),
                    AttrValue::from(if member { 1.0 } else { 0.0 }),
                );
            }
            AttributeMode::Noisy { sigma } => {
                attrs.insert("kind".into(), AttrValue::from("user"));
                let base = if member { 1.0 } else { 0.0 };
                attrs.insert(
                    "score".into(),
                    AttrValue::from(base + sigma * gaussian(rng)),
                );
            }
        }
        attrs
    }

    fn edge(&self, internal: bool, rng: &mut ChaCha8Rng) -> AttrMap {
        let mut attrs = AttrMap::new();
        match self.mode {
            AttributeMode::Separable => {
                attrs.insert(
                    "etype".into(),
                    AttrValue::from(if internal { "goi" } else { "bg" }),
                );
                attrs.insert(
                    "amount".into(),
                    AttrValue::from(if internal { 1.0 } else { 0.0 }),
                );
            }
            AttributeMode::Noisy { sigma } => {
                attrs.insert("etype".into(), AttrValue::from("txn"));
                let base = if internal { 1.0 } else { 0.0 };
                attrs.insert(
                    "amount".into(),
                    AttrValue::from(base + sigma * gaussian(rng)),
                );
            }
        }
        attrs
    }
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller transform.
    let u1: f64 = rng.random::<f64>().max(1e-300);
    let u2: f64 = rng.random::<f64>();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Collects edge records and assigns zero-padded sequential ids.
#[derive(Default)]
struct EdgeSink {
    edges: Vec<EdgeRecord>,
    counter: usize,
}

impl EdgeSink {
    fn push(&mut self, a: &NodeId, b: &NodeId, attrs: AttrMap) -> crate::graph::EdgeId {
        let id = crate::graph::EdgeId::new(format!("e{:05}", self.counter));
        self.counter += 1;
        self.edges
            .push(EdgeRecord::with_attrs(a.clone(), b.clone(), attrs).id(id.clone()));
        id
    }
}

/// Generate a benchmark. Deterministic: the same config (including seed)
/// yields a bit-identical benchmark.
pub fn generate_benchmark(cfg: &BenchmarkConfig) -> Result<Benchmark> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let painter = AttrPainter {
        mode: cfg.attributes,
    };

    let background_ids: Vec<NodeId> = (0..cfg.background_nodes)
        .map(|i| NodeId::new(format!("b{i:04}")))
        .collect();

    // Plant groups: sizes, then memberships with chain overlap.
    let sizes: Vec<usize> = (0..cfg.groups)
        .map(|_| rng.random_range(cfg.group_size.0..=cfg.group_size.1))
        .collect();
    let mut member_counter = 0usize;
    let mut groups: Vec<Vec<NodeId>> = Vec::with_capacity(cfg.groups);
    for (gi, &size) in sizes.iter().enumerate() {
        let shared = if gi == 0 {
            0
        } else {
            (cfg.overlap_fraction * size as f64).round() as usize
        };
        let mut members: Vec<NodeId> = Vec::with_capacity(size);
        for _ in 0..(size - shared) {
            members.push(NodeId::new(format!("g{member_counter:04}")));
            member_counter += 1;
        }
        if shared > 0 {
            let previous = &groups[gi - 1];
            let picks = sample_indices(previous.len(), shared.min(previous.len()), &mut rng);
            for p in picks {
                members.push(previous[p].clone());
            }
        }
        groups.push(members);
    }

    let member_set: BTreeSet<&NodeId> = groups.iter().flatten().collect();
    let mut nodes: Vec<NodeRecord> = Vec::new();
    for id in &background_ids {
        nodes.push(NodeRecord::with_attrs(
            id.clone(),
            painter.node(false, &mut rng),
        ));
    }
    for id in &member_set {
        nodes.push(NodeRecord::with_attrs(
            (*id).clone(),
            painter.node(true, &mut rng),
        ));
    }

    // Group-internal transactions, with sampled multiplicities.
    let mut sink = EdgeSink::default();
    let mut group_edge_ids: Vec<Vec<crate::graph::EdgeId>> = Vec::with_capacity(cfg.groups);
    for members in &groups {
        let mut ids = Vec::new();
        let motif_pairs: Vec<(usize, usize)> = match cfg.motif {
            GroupMotif::Hub => (1..members.len()).map(|i| (0, i)).collect(),
            GroupMotif::Clique => {
                let mut pairs = Vec::new();
                for i in 0..members.len() {
                    for j in (i + 1)..members.len() {
                        pairs.push((i, j));
                    }
                }
                pairs
            }
            GroupMotif::Path => (1..members.len()).map(|i| (i - 1, i)).collect(),
        };
        for (i, j) in motif_pairs {
            let copies = rng.random_range(cfg.multiplicity.0..=cfg.multiplicity.1);
            for _ in 0..copies {
                ids.push(sink.push(&members[i], &members[j], painter.edge(true, &mut rng)));
            }
        }
        group_edge_ids.push(ids);
    }

    // Context decoration from the background pool, one slice per group.
    let context_need = cfg.context.nodes_needed();
    let context_pool = sample_indices(cfg.background_nodes, cfg.groups * context_need, &mut rng);
    for (gi, members) in groups.iter().enumerate() {
        let slice = &context_pool[gi * context_need..(gi + 1) * context_need];
        let ctx: Vec<&NodeId> = slice.iter().map(|&i| &background_ids[i]).collect();
        match cfg.context {
            ContextMotif::Square => {
                for i in 0..4 {
                    for j in (i + 1)..4 {
                        sink.push(ctx[i], ctx[j], painter.edge(false, &mut rng));
                    }
                }
                sink.push(&members[0], ctx[0], painter.edge(false, &mut rng));
            }
            ContextMotif::Triangles => {
                for tri in [&ctx[0..3], &ctx[3..6]] {
                    for i in 0..3 {
                        for j in (i + 1)..3 {
                            sink.push(tri[i], tri[j], painter.edge(false, &mut rng));
                        }
                    }
                }
                sink.push(&members[0], ctx[0], painter.edge(false, &mut rng));
                let second = members.get(1).unwrap_or(&members[0]);
                sink.push(second, ctx[3], painter.edge(false, &mut rng));
            }
        }
    }

    // Random background transactions over the whole node population.
    let all_ids: Vec<&NodeId> = background_ids
        .iter()
        .chain(member_set.iter().copied())
        .collect();
    if all_ids.len() >= 2 {
        let background_edges =
            (cfg.background_edge_density * cfg.background_nodes as f64).round() as usize;
        for _ in 0..background_edges {
            let a = rng.random_range(0..all_ids.len());
            let b = loop {
                let b = rng.random_range(0..all_ids.len());
                if b != a {
                    break b;
                }
            };
            sink.push(all_ids[a], all_ids[b], painter.edge(false, &mut rng));
        }
    }

    let graph = Multigraph::build(nodes, sink.edges)?;

    let truth_members = groups
        .iter()
        .zip(&group_edge_ids)
        .map(|(members, edge_ids)| graph.subgraph(members.iter(), edge_ids.iter()))
        .collect::<Result<Vec<_>>>()?;
    let truth = SgiSet::new("planted", truth_members);

    if matches!(cfg.attributes, AttributeMode::Separable) {
        audit_separability(&graph, &truth)?;
    }

    let sample_seed = rng.random::<u64>();
    let samples = if cfg.groups == 0 {
        SgiSet::new("planted", Vec::new())
    } else {
        sample_training_set(&truth, cfg.training_samples.max(1), sample_seed)?
    };

    Ok(Benchmark {
        graph,
        truth,
        samples,
    })
}

/// Uniform sample of `n` truth members without replacement, in truth order.
pub fn sample_training_set(truth: &SgiSet, n: usize, seed: u64) -> Result<SgiSet> {
    if n == 0 || n > truth.len() {
        return Err(Error::InvalidConfig(format!(
            "cannot sample {n} of {} truth members",
            truth.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = sample_indices(truth.len(), n, &mut rng);
    picks.sort_unstable();
    Ok(SgiSet::new(
        truth.goi_type.clone(),
        picks.iter().map(|&i| truth.members[i].clone()).collect(),
    ))
}

/// First `n` slots of a seeded Fisher-Yates pass over `0..len`.
fn sample_indices(len: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut all: Vec<usize> = (0..len).collect();
    for i in 0..n.min(len) {
        let j = rng.random_range(i..len);
        all.swap(i, j);
    }
    all.truncate(n);
    all
}

/// Verify that attribute-only node features of every group member are at
/// cosine distance >= 0.5 from every background node.
fn audit_separability(graph: &Multigraph, truth: &SgiSet) -> Result<()> {
    let schema = FeatureSchema::attributes_only(FeatureLevel::Node, graph)?;
    let member_set: BTreeSet<&NodeId> = truth.iter().flat_map(|s| s.nodes()).collect();
    let member_vectors = member_set
        .iter()
        .map(|id| node_features(graph, id, &schema))
        .collect::<Result<Vec<_>>>()?;
    for id in graph.node_ids() {
        if member_set.contains(id) {
            continue;
        }
        let background = node_features(graph, id, &schema)?;
        for (member, vector) in member_set.iter().zip(&member_vectors) {
            let d = cosine_distance(vector, &background)?;
            if d < 0.5 {
                return Err(Error::SeparabilityAudit(format!(
                    "member `{member}` is at distance {d:.3} from background `{id}`"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> BenchmarkConfig {
        BenchmarkConfig {
            background_nodes: 60,
            background_edge_density: 1.0,
            groups: 4,
            group_size: (4, 6),
            training_samples: 2,
            seed: 42,
            ..BenchmarkConfig::default()
        }
    }

    #[test]
    fn zero_groups_mean_pure_background() {
        let cfg = BenchmarkConfig {
            groups: 0,
            training_samples: 0,
            ..small_config()
        };
        let bench = generate_benchmark(&cfg).unwrap();
        assert!(bench.truth.is_empty());
        assert!(bench.samples.is_empty());
        assert_eq!(bench.graph.node_count(), cfg.background_nodes);
    }

    #[test]
    fn generation_is_deterministic() {
        let cfg = small_config();
        let a = generate_benchmark(&cfg).unwrap();
        let b = generate_benchmark(&cfg).unwrap();
        assert_eq!(a.graph.node_ids(), b.graph.node_ids());
        assert_eq!(a.graph.edges(), b.graph.edges());
        assert_eq!(a.truth, b.truth);
        assert_eq!(a.samples, b.samples);
    }

    #[test]
    fn config_shape_is_respected() {
        let cfg = small_config();
        let bench = generate_benchmark(&cfg).unwrap();
        assert_eq!(bench.truth.len(), cfg.groups);
        for member in bench.truth.iter() {
            assert!(member.node_count() >= cfg.group_size.0);
            assert!(member.node_count() <= cfg.group_size.1);
        }
        assert_eq!(bench.samples.len(), cfg.training_samples);
        // Samples are truth members.
        for sample in bench.samples.iter() {
            assert!(bench.truth.iter().any(|t| t == sample));
        }
    }

    #[test]
    fn planted_groups_are_connected() {
        for motif in [GroupMotif::Hub, GroupMotif::Clique, GroupMotif::Path] {
            let cfg = BenchmarkConfig {
                motif,
                ..small_config()
            };
            let bench = generate_benchmark(&cfg).unwrap();
            for member in bench.truth.iter() {
                let others: BTreeSet<NodeId> = bench
                    .graph
                    .node_ids()
                    .iter()
                    .filter(|id| !member.contains_node(id))
                    .cloned()
                    .collect();
                let restricted = bench.graph.remove(&others, &BTreeSet::new());
                assert_eq!(restricted.connected_components().len(), 1);
            }
        }
    }

    #[test]
    fn separable_mode_passes_its_own_audit_and_scan() {
        let cfg = BenchmarkConfig {
            background_nodes: 120,
            groups: 6,
            ..small_config()
        };
        let bench = generate_benchmark(&cfg).unwrap();
        let members: BTreeSet<&NodeId> = bench.truth.iter().flat_map(|s| s.nodes()).collect();
        for id in bench.graph.node_ids() {
            let kind = bench.graph.node_attrs(id).unwrap()["kind"]
                .as_text()
                .unwrap();
            assert_eq!(members.contains(id), kind == "goi", "{id}");
        }
    }

    #[test]
    fn overlap_fraction_shares_nodes_between_neighbors() {
        let cfg = BenchmarkConfig {
            overlap_fraction: 0.25,
            group_size: (4, 4),
            ..small_config()
        };
        let bench = generate_benchmark(&cfg).unwrap();
        for window in bench.truth.members.windows(2) {
            let shared = window[0].nodes().intersection(window[1].nodes()).count();
            assert_eq!(shared, 1); // round(0.25 * 4)
        }
    }

    #[test]
    fn noisy_mode_perturbs_scores() {
        let cfg = BenchmarkConfig {
            attributes: AttributeMode::Noisy { sigma: 0.2 },
            ..small_config()
        };
        let bench = generate_benchmark(&cfg).unwrap();
        let scores: BTreeSet<String> = bench
            .graph
            .node_ids()
            .iter()
            .map(|id| {
                format!(
                    "{:?}",
                    bench.graph.node_attrs(id).unwrap()["score"].as_number()
                )
            })
            .collect();
        assert!(scores.len() > 2, "scores should spread out");
    }

    #[test]
    fn infeasible_configs_error() {
        let mut cfg = small_config();
        cfg.background_nodes = 3; // not enough for context decoration
        assert!(generate_benchmark(&cfg).is_err());

        let mut cfg = small_config();
        cfg.overlap_fraction = 0.95;
        assert!(generate_benchmark(&cfg).is_err());

        let mut cfg = small_config();
        cfg.training_samples = 99;
        assert!(generate_benchmark(&cfg).is_err());
    }

    #[test]
    fn training_set_sampling_contract() {
        let bench = generate_benchmark(&small_config()).unwrap();
        let all = sample_training_set(&bench.truth, bench.truth.len(), 9).unwrap();
        assert_eq!(all, bench.truth);
        let one = sample_training_set(&bench.truth, 1, 9).unwrap();
        assert_eq!(one.len(), 1);
        let a = sample_training_set(&bench.truth, 3, 123).unwrap();
        let b = sample_training_set(&bench.truth, 3, 123).unwrap();
        assert_eq!(a, b);
        assert!(sample_training_set(&bench.truth, 0, 1).is_err());
        assert!(sample_training_set(&bench.truth, 99, 1).is_err());
    }
}
