//! Overlapping community detection with speaker-listener label propagation.
//!
//! Every node keeps a memory of heard labels, seeded with its own id. Each
//! round, nodes listen in a seeded random order: every incident edge yields
//! one label drawn from the neighbor's memory (so parallel edges give a
//! neighbor proportionally more draws), and the most frequent drawn label is
//! appended to the listener's memory. After the rounds, a node belongs to
//! every label whose share of its memory reaches the membership threshold.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, NodeId, Subgraph};

/// Parameters for overlapping label propagation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LpaParams {
    /// Number of propagation rounds.
    pub iterations: usize,
    /// Minimum share of a node's memory a label needs for membership,
    /// in (0, 1].
    pub membership_threshold: f64,
    pub seed: u64,
}

impl Default for LpaParams {
    fn default() -> Self {
        LpaParams {
            iterations: 30,
            membership_threshold: 0.3,
            seed: 0,
        }
    }
}

impl LpaParams {
    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::InvalidConfig("iterations must be >= 1".into()));
        }
        if !(self.membership_threshold > 0.0 && self.membership_threshold <= 1.0) {
            return Err(Error::InvalidConfig(
                "membership threshold must be in (0, 1]".into(),
            ));
        }
        Ok(())
    }
}

/// Run label propagation and return the communities as node-induced
/// subgraphs.
///
/// Output is deterministic for a fixed seed and sorted by member ids.
/// Singleton communities are discarded, label sets that are disconnected in
/// the graph are split into their components, and communities fully
/// contained in another community are dropped.
pub fn overlapping_label_propagation(g: &Multigraph, params: &LpaParams) -> Result<Vec<Subgraph>> {
    params.validate()?;
    let n = g.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    // memories[v] holds one label (a node index) per round heard so far.
    let mut memories: Vec<Vec<u32>> = (0..n).map(|v| vec![v as u32]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut counts: Vec<u32> = vec![0; n];
    let mut touched: Vec<u32> = Vec::new();

    for _ in 0..params.iterations {
        shuffle(&mut order, &mut rng);
        for &listener in &order {
            let adjacency = g.adjacency_at(listener);
            if adjacency.is_empty() {
                continue;
            }
            touched.clear();
            let mut best_label = u32::MAX;
            let mut best_count = 0u32;
            for &(neighbor, _) in adjacency {
                let memory = &memories[neighbor];
                let spoken = memory[rng.random_range(0..memory.len())];
                if counts[spoken as usize] == 0 {
                    touched.push(spoken);
                }
                counts[spoken as usize] += 1;
                let c = counts[spoken as usize];
                // Ties resolve to the smallest label. Node indices follow id
                // order, so this is the smallest node id.
                if c > best_count || (c == best_count && spoken < best_label) {
                    best_count = c;
                    best_label = spoken;
                }
            }
            for &label in &touched {
                counts[label as usize] = 0;
            }
            memories[listener].push(best_label);
        }
    }

    // Membership: every label holding at least the threshold share of the
    // node's memory.
    let mut label_members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, memory) in memories.iter().enumerate() {
        touched.clear();
        for &label in memory {
            if counts[label as usize] == 0 {
                touched.push(label);
            }
            counts[label as usize] += 1;
        }
        let len = memory.len() as f64;
        for &label in &touched {
            let share = counts[label as usize] as f64 / len;
            counts[label as usize] = 0;
            if share >= params.membership_threshold {
                label_members[label as usize].push(v);
            }
        }
    }

    let mut node_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for members in &label_members {
        if members.len() < 2 {
            continue;
        }
        for component in split_connected(g, members) {
            if component.len() >= 2 {
                node_sets.insert(component);
            }
        }
    }

    // Drop communities nested inside a larger one.
    let sets: Vec<Vec<usize>> = node_sets.into_iter().collect();
    let mut keep = vec![true; sets.len()];
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if i != j && keep[i] && is_proper_subset(&sets[i], &sets[j]) {
                keep[i] = false;
                break;
            }
        }
    }

    let mut communities: Vec<Vec<NodeId>> = sets
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(set, _)| set.iter().map(|&v| g.node_id_at(v).clone()).collect())
        .collect();
    communities.sort();
    communities
        .into_iter()
        .map(|ids| g.induced_subgraph(ids.iter()))
        .collect()
}

fn shuffle(order: &mut [usize], rng: &mut ChaCha8Rng) {
    for i in (1..order.len()).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
}

/// Split a member set into the connected components it forms in `g`.
fn split_connected(g: &Multigraph, members: &[usize]) -> Vec<Vec<usize>> {
    let member_set: BTreeSet<usize> = members.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in members {
        if seen.contains(&start) {
            continue;
        }
        let mut component = Vec::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            component.push(v);
            for &w in g.neighbor_set_at(v) {
                if member_set.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        component.sort_unstable();
        out.push(component);
    }
    out
}

fn is_proper_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn name_sets(communities: &[Subgraph]) -> Vec<Vec<String>> {
        communities
            .iter()
            .map(|c| c.nodes().iter().map(|n| n.to_string()).collect())
            .collect()
    }

    #[test]
    fn two_disjoint_triangles_are_recovered() {
        let (g, groups) = fixtures::disjoint_cliques(&[3, 3]);
        let params = LpaParams {
            iterations: 20,
            membership_threshold: 0.3,
            seed: 7,
        };
        let communities = overlapping_label_propagation(&g, &params).unwrap();
        assert_eq!(name_sets(&communities), groups);
    }

    #[test]
    fn single_node_yields_nothing() {
        let g = Multigraph::build(vec![crate::graph::NodeRecord::new("v")], Vec::new()).unwrap();
        let params = LpaParams::default();
        assert!(overlapping_label_propagation(&g, &params)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn barbell_splits_into_the_two_cliques() {
        let g = fixtures::barbell();
        let params = LpaParams {
            iterations: 50,
            membership_threshold: 0.3,
            seed: 11,
        };
        let communities = overlapping_label_propagation(&g, &params).unwrap();
        // Frozen regression output for this seed. Bridge-adjacent nodes may
        // carry both labels.
        assert_eq!(
            name_sets(&communities),
            vec![
                vec!["l0", "l1", "l2", "l3", "r0", "r2", "r3"],
                vec!["r0", "r1", "r2", "r3"],
            ]
        );
        let left: BTreeSet<NodeId> = ["l0", "l1", "l2", "l3"].iter().map(|&s| s.into()).collect();
        let right: BTreeSet<NodeId> = ["r0", "r1", "r2", "r3"].iter().map(|&s| s.into()).collect();
        assert!(
            communities.iter().any(|c| left.is_subset(c.nodes())),
            "left clique missing: {:?}",
            name_sets(&communities)
        );
        assert!(
            communities.iter().any(|c| right.is_subset(c.nodes())),
            "right clique missing: {:?}",
            name_sets(&communities)
        );
        // Bridge endpoints may appear in both, but the cliques never merge.
        assert!(communities
            .iter()
            .all(|c| !(left.is_subset(c.nodes()) && right.is_subset(c.nodes()))));
    }

    #[test]
    fn fixed_seed_is_bit_identical() {
        let g = fixtures::barbell();
        let params = LpaParams {
            iterations: 25,
            membership_threshold: 0.25,
            seed: 99,
        };
        let a = overlapping_label_propagation(&g, &params).unwrap();
        let b = overlapping_label_propagation(&g, &params).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn communities_are_connected() {
        let g = fixtures::transaction_network();
        for seed in 0..5 {
            let params = LpaParams {
                iterations: 20,
                membership_threshold: 0.3,
                seed,
            };
            for community in overlapping_label_propagation(&g, &params).unwrap() {
                let nodes: Vec<NodeId> = community.nodes().iter().cloned().collect();
                let others: BTreeSet<NodeId> = g
                    .node_ids()
                    .iter()
                    .filter(|id| !community.contains_node(id))
                    .cloned()
                    .collect();
                let restricted = g.remove(&others, &BTreeSet::new());
                assert_eq!(restricted.connected_components().len(), 1, "{nodes:?}");
            }
        }
    }
}
