//! Second detection approach: predict the elements that belong to no
//! subgraph of interest, prune them, and read the surviving connected
//! components as predictions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::{
    edge_features, node_features, FeatureLevel, FeatureSchema, FeatureVector, Standardizer,
};
use crate::graph::{EdgeId, Multigraph, NodeId, SgiSet};
use crate::selection::check;

/// The elements predicted to lie outside every subgraph of interest.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadSets {
    pub v_bad: BTreeSet<NodeId>,
    pub e_bad: BTreeSet<EdgeId>,
}

/// Which pruning rule turns the bad sets into a pruned graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PruneStrategy {
    /// Remove bad nodes and bad edges.
    Simple,
    /// Remove bad nodes only.
    Node,
    /// Remove bad edges only.
    Edge,
    /// Remove bad edges, and bad nodes except those with a majority of
    /// good incident edges.
    Majority,
}

/// Configuration for [`second_approach`].
#[derive(Debug, Clone)]
pub struct PruneConfig {
    pub node_schema: FeatureSchema,
    pub edge_schema: FeatureSchema,
    pub gamma_node: f64,
    pub gamma_edge: f64,
    pub strategy: PruneStrategy,
    /// Components smaller than this are background residue, not predictions.
    pub min_component_size: usize,
}

impl PruneConfig {
    pub fn validate(&self) -> Result<()> {
        if self.gamma_node <= 0.0 || self.gamma_edge <= 0.0 {
            return Err(Error::InvalidConfig("gammas must be > 0".into()));
        }
        if self.min_component_size < 2 {
            return Err(Error::InvalidConfig(
                "min component size must be >= 2; singletons are background".into(),
            ));
        }
        if self.node_schema.level() != FeatureLevel::Node {
            return Err(Error::InvalidSchema(
                "node schema must be node-level".into(),
            ));
        }
        if self.edge_schema.level() != FeatureLevel::Edge {
            return Err(Error::InvalidSchema(
                "edge schema must be edge-level".into(),
            ));
        }
        Ok(())
    }
}

/// Start from everything-bad and clear each node or edge whose features lie
/// strictly within the matching threshold of some sample element. Sample
/// element features are computed in the context of the full graph, so both
/// sides of the comparison see the same surroundings.
pub fn compute_bad_sets(g: &Multigraph, samples: &SgiSet, cfg: &PruneConfig) -> Result<BadSets> {
    cfg.validate()?;
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    samples.validate_against(g)?;

    let mut sample_nodes: BTreeSet<&NodeId> = BTreeSet::new();
    let mut sample_edges: BTreeSet<&EdgeId> = BTreeSet::new();
    for sample in samples.iter() {
        sample_nodes.extend(sample.nodes());
        sample_edges.extend(sample.edges());
    }

    let mut node_vectors = sample_nodes
        .iter()
        .map(|id| node_features(g, id, &cfg.node_schema))
        .collect::<Result<Vec<_>>>()?;
    let node_std = fit_standardizer(&cfg.node_schema, &mut node_vectors)?;
    let mut edge_vectors = sample_edges
        .iter()
        .map(|id| edge_features(g, id, &cfg.edge_schema))
        .collect::<Result<Vec<_>>>()?;
    let edge_std = fit_standardizer(&cfg.edge_schema, &mut edge_vectors)?;

    let mut bad = BadSets::default();
    for id in g.node_ids() {
        let mut vector = node_features(g, id, &cfg.node_schema)?;
        if let Some(std) = &node_std {
            vector = std.apply(&vector)?;
        }
        if !check(&vector, &node_vectors, cfg.gamma_node)? {
            bad.v_bad.insert(id.clone());
        }
    }
    for edge in g.edges() {
        let mut vector = edge_features(g, &edge.id, &cfg.edge_schema)?;
        if let Some(std) = &edge_std {
            vector = std.apply(&vector)?;
        }
        if !check(&vector, &edge_vectors, cfg.gamma_edge)? {
            bad.e_bad.insert(edge.id.clone());
        }
    }
    Ok(bad)
}

fn fit_standardizer(
    schema: &FeatureSchema,
    vectors: &mut [FeatureVector],
) -> Result<Option<Standardizer>> {
    if !schema.standardize() || vectors.is_empty() {
        return Ok(None);
    }
    let std = Standardizer::fit(vectors)?;
    for v in vectors.iter_mut() {
        *v = std.apply(v)?;
    }
    Ok(Some(std))
}

/// Share of a node's incident edges that are not bad, counting parallel
/// copies individually. A node without edges scores 0.
pub fn edge_majority(g: &Multigraph, v: &NodeId, e_bad: &BTreeSet<EdgeId>) -> Result<f64> {
    let idx = g.require_node(v)?;
    let incident = g.adjacency_at(idx);
    if incident.is_empty() {
        return Ok(0.0);
    }
    let good = incident
        .iter()
        .filter(|&&(_, e)| !e_bad.contains(&g.edge_at(e).id))
        .count();
    Ok(good as f64 / incident.len() as f64)
}

/// Apply a pruning strategy. Removing a node always removes its incident
/// edges; ids not present in the graph are ignored.
pub fn prune(g: &Multigraph, bad: &BadSets, strategy: PruneStrategy) -> Multigraph {
    let no_nodes = BTreeSet::new();
    let no_edges = BTreeSet::new();
    match strategy {
        PruneStrategy::Simple => g.remove(&bad.v_bad, &bad.e_bad),
        PruneStrategy::Node => g.remove(&bad.v_bad, &no_edges),
        PruneStrategy::Edge => g.remove(&no_nodes, &bad.e_bad),
        PruneStrategy::Majority => {
            let doomed: BTreeSet<NodeId> = bad
                .v_bad
                .iter()
                .filter(|id| {
                    edge_majority(g, id, &bad.e_bad)
                        .map(|share| share < 0.5)
                        .unwrap_or(false)
                })
                .cloned()
                .collect();
            g.remove(&doomed, &bad.e_bad)
        }
    }
}

/// Full second approach: compute bad sets, prune, and return the surviving
/// components (at least `min_component_size` nodes) as node-induced
/// subgraphs of the original graph.
pub fn second_approach(g: &Multigraph, samples: &SgiSet, cfg: &PruneConfig) -> Result<SgiSet> {
    let bad = compute_bad_sets(g, samples, cfg)?;
    let mut predicted = components_of_pruned(g, &bad, cfg);
    predicted.goi_type = samples.goi_type.clone();
    Ok(predicted)
}

/// The component-extraction half of the second approach, reusable when the
/// bad sets are already known.
pub fn components_of_pruned(g: &Multigraph, bad: &BadSets, cfg: &PruneConfig) -> SgiSet {
    let pruned = prune(g, bad, cfg.strategy);
    let members = pruned
        .connected_components()
        .into_iter()
        .filter(|c| c.node_count() >= cfg.min_component_size)
        .map(|c| {
            g.induced_subgraph(c.nodes().iter())
                .expect("component nodes come from g")
        })
        .collect();
    SgiSet::new("predicted", members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn attr_config(g: &Multigraph, strategy: PruneStrategy, gamma: f64) -> PruneConfig {
        PruneConfig {
            node_schema: FeatureSchema::attributes_only(FeatureLevel::Node, g).unwrap(),
            edge_schema: FeatureSchema::attributes_only(FeatureLevel::Edge, g).unwrap(),
            gamma_node: gamma,
            gamma_edge: gamma,
            strategy,
            min_component_size: 2,
        }
    }

    fn sample_group(g: &Multigraph) -> SgiSet {
        let ids: Vec<NodeId> = ["A", "B", "C", "D"].iter().map(|&s| s.into()).collect();
        // The known group carries only its internal transactions.
        let edges: Vec<EdgeId> = g
            .edges()
            .iter()
            .filter(|e| {
                ids.contains(&e.src)
                    && ids.contains(&e.dst)
                    && e.attrs.get("etype").and_then(|v| v.as_text()) == Some("internal")
            })
            .map(|e| e.id.clone())
            .collect();
        SgiSet::new("group", vec![g.subgraph(ids.iter(), edges.iter()).unwrap()])
    }

    #[test]
    fn huge_gamma_clears_the_bad_sets() {
        let g = fixtures::transaction_network();
        let cfg = attr_config(&g, PruneStrategy::Majority, 1e9);
        let bad = compute_bad_sets(&g, &sample_group(&g), &cfg).unwrap();
        assert!(bad.v_bad.is_empty());
        assert!(bad.e_bad.is_empty());
    }

    #[test]
    fn tiny_gamma_spares_only_feature_twins() {
        let g = fixtures::transaction_network();
        let cfg = attr_config(&g, PruneStrategy::Majority, 1e-9);
        let bad = compute_bad_sets(&g, &sample_group(&g), &cfg).unwrap();
        // Every member-kind node is an exact attribute twin of a sample
        // node; everything else is bad.
        for id in g.node_ids() {
            let kind = g.node_attrs(id).unwrap()["kind"].as_text().unwrap();
            assert_eq!(bad.v_bad.contains(id), kind != "member", "{id}");
        }
    }

    #[test]
    fn attribute_split_marks_background_and_decoys_bad() {
        let g = fixtures::transaction_network();
        let cfg = attr_config(&g, PruneStrategy::Majority, 0.5);
        let bad = compute_bad_sets(&g, &sample_group(&g), &cfg).unwrap();
        let bad_names: Vec<&str> = bad.v_bad.iter().map(|n| n.as_str()).collect();
        let expected: Vec<&str> = g
            .node_ids()
            .iter()
            .filter(|id| g.node_attrs(id).unwrap()["kind"].as_text().unwrap() != "member")
            .map(|id| id.as_str())
            .collect();
        assert_eq!(bad_names, expected);
    }

    #[test]
    fn edge_majority_counts_parallel_copies() {
        let g = fixtures::graph_from_edges(&[("a", "b"), ("a", "b"), ("a", "c")]);
        let none = BTreeSet::new();
        assert_eq!(edge_majority(&g, &"a".into(), &none).unwrap(), 1.0);
        let all: BTreeSet<EdgeId> = g.edges().iter().map(|e| e.id.clone()).collect();
        assert_eq!(edge_majority(&g, &"a".into(), &all).unwrap(), 0.0);
        let one: BTreeSet<EdgeId> = [g.edges()[0].id.clone()].into_iter().collect();
        assert_eq!(edge_majority(&g, &"a".into(), &one).unwrap(), 2.0 / 3.0);
        assert!(edge_majority(&g, &"zz".into(), &none).is_err());
    }

    #[test]
    fn isolated_node_is_never_spared() {
        let g = Multigraph::build(vec![crate::graph::NodeRecord::new("lone")], Vec::new()).unwrap();
        assert_eq!(
            edge_majority(&g, &"lone".into(), &BTreeSet::new()).unwrap(),
            0.0
        );
    }

    #[test]
    fn empty_bad_sets_leave_the_graph_unchanged() {
        let g = fixtures::transaction_network();
        let bad = BadSets::default();
        for strategy in [
            PruneStrategy::Simple,
            PruneStrategy::Node,
            PruneStrategy::Edge,
            PruneStrategy::Majority,
        ] {
            let pruned = prune(&g, &bad, strategy);
            assert_eq!(pruned.node_count(), g.node_count());
            assert_eq!(pruned.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn node_pruning_cannot_split_bridged_groups() {
        let g = fixtures::transaction_network();
        let bad = BadSets {
            v_bad: g
                .node_ids()
                .iter()
                .filter(|id| g.node_attrs(id).unwrap()["kind"].as_text().unwrap() != "member")
                .cloned()
                .collect(),
            e_bad: BTreeSet::new(),
        };
        let pruned = prune(&g, &bad, PruneStrategy::Node);
        let comps = pruned.connected_components();
        let bridged = comps
            .iter()
            .find(|c| c.contains_node(&"A".into()))
            .expect("component with A");
        // The parallel bridge between C and E keeps both groups together.
        assert!(bridged.contains_node(&"E".into()));
        assert_eq!(bridged.node_count(), 9);
    }

    #[test]
    fn edge_pruning_needs_every_parallel_copy() {
        let g = fixtures::transaction_network();
        let external: BTreeSet<EdgeId> = g
            .edges()
            .iter()
            .filter(|e| e.attrs.get("etype").and_then(|v| v.as_text()) != Some("internal"))
            .map(|e| e.id.clone())
            .collect();
        let bridge: Vec<EdgeId> = g
            .edges()
            .iter()
            .filter(|e| {
                let pair = [e.src.as_str(), e.dst.as_str()];
                pair.contains(&"C") && pair.contains(&"E")
            })
            .map(|e| e.id.clone())
            .collect();
        assert_eq!(bridge.len(), 2);

        // One copy of the bridge survives: still one component.
        let mut partial = external.clone();
        partial.remove(&bridge[0]);
        let pruned = prune(
            &g,
            &BadSets {
                v_bad: BTreeSet::new(),
                e_bad: partial,
            },
            PruneStrategy::Edge,
        );
        let comps = pruned.connected_components();
        let with_a = comps.iter().find(|c| c.contains_node(&"A".into())).unwrap();
        assert!(with_a.contains_node(&"E".into()));

        // Both copies removed: the groups separate.
        let pruned = prune(
            &g,
            &BadSets {
                v_bad: BTreeSet::new(),
                e_bad: external,
            },
            PruneStrategy::Edge,
        );
        let comps = pruned.connected_components();
        let with_a = comps.iter().find(|c| c.contains_node(&"A".into())).unwrap();
        assert!(!with_a.contains_node(&"E".into()));
        assert_eq!(with_a.node_count(), 4);
    }

    #[test]
    fn whole_graph_sample_predicts_the_whole_graph() {
        let g = fixtures::barbell();
        let all = g.induced_subgraph(g.node_ids()).unwrap();
        let samples = SgiSet::new("all", vec![all.clone()]);
        let cfg = PruneConfig {
            node_schema: FeatureSchema::structural(FeatureLevel::Node),
            edge_schema: FeatureSchema::structural(FeatureLevel::Edge),
            gamma_node: 1e9,
            gamma_edge: 1e9,
            strategy: PruneStrategy::Majority,
            min_component_size: 2,
        };
        let found = second_approach(&g, &samples, &cfg).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found.members[0].nodes(), all.nodes());
    }

    #[test]
    fn majority_pruning_recovers_the_three_groups() {
        let g = fixtures::transaction_network();
        let cfg = attr_config(&g, PruneStrategy::Majority, 0.5);
        let found = second_approach(&g, &sample_group(&g), &cfg).unwrap();
        let names: Vec<Vec<&str>> = found
            .iter()
            .map(|s| s.nodes().iter().map(|n| n.as_str()).collect())
            .collect();
        assert_eq!(
            names,
            vec![
                vec!["A", "B", "C", "D"],
                vec!["E", "F", "G", "H", "I"],
                vec!["J", "K", "L", "M"],
            ]
        );
    }

    #[test]
    fn predictions_carry_original_induced_edges() {
        let g = fixtures::transaction_network();
        let cfg = attr_config(&g, PruneStrategy::Majority, 0.5);
        let found = second_approach(&g, &sample_group(&g), &cfg).unwrap();
        let green = &found.members[1];
        // All original edges among E..I are restored, including parallel
        // copies that pruning never touched.
        let expected = g.induced_subgraph(green.nodes().iter()).unwrap();
        assert_eq!(green.edges(), expected.edges());
    }

    #[test]
    fn foreign_sample_is_rejected() {
        let g = fixtures::transaction_network();
        let other = fixtures::triangle();
        let foreign = other.induced_subgraph(other.node_ids()).unwrap();
        let cfg = attr_config(&g, PruneStrategy::Majority, 0.5);
        let samples = SgiSet::new("t", vec![foreign]);
        assert!(compute_bad_sets(&g, &samples, &cfg).is_err());
    }
}
