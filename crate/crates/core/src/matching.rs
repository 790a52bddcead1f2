//! Query graphs and exact query matching by backtracking search.
//!
//! A query is a small connected simple pattern; each pattern edge may demand
//! a minimum transaction multiplicity. An occurrence is a node set admitting
//! an injective mapping of the pattern where every pattern edge lands on an
//! endpoint pair with enough parallel edges. Occurrences are deduplicated by
//! node set: remappings of the same nodes count once.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, NodeId, Subgraph};

/// A connected simple pattern with optional per-edge minimum multiplicity.
#[derive(Debug, Clone)]
pub struct QueryGraph {
    graph: Multigraph,
    min_multiplicity: BTreeMap<EdgeId, u32>,
}

impl QueryGraph {
    /// Wrap a pattern graph. The pattern must be connected, non-empty, and
    /// simple (no parallel copies; multiplicity demands go through
    /// `min_multiplicity`). Missing entries default to 1.
    pub fn new(graph: Multigraph, min_multiplicity: BTreeMap<EdgeId, u32>) -> Result<Self> {
        if graph.node_count() == 0 {
            return Err(Error::InvalidQuery("query has no nodes".into()));
        }
        if graph.connected_components().len() != 1 {
            return Err(Error::InvalidQuery("query must be connected".into()));
        }
        for edge in graph.edges() {
            if graph.multiplicity(&edge.src, &edge.dst) > 1 {
                return Err(Error::InvalidQuery(
                    "query must be simple; use min_multiplicity for parallel demands".into(),
                ));
            }
        }
        for (id, &m) in &min_multiplicity {
            if graph.edge(id).is_none() {
                return Err(Error::UnknownEdge(id.to_string()));
            }
            if m == 0 {
                return Err(Error::InvalidQuery(format!(
                    "min multiplicity of edge `{id}` must be >= 1"
                )));
            }
        }
        Ok(QueryGraph {
            graph,
            min_multiplicity,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn min_multiplicity(&self, id: &EdgeId) -> u32 {
        self.min_multiplicity.get(id).copied().unwrap_or(1)
    }

    pub fn min_multiplicity_map(&self) -> &BTreeMap<EdgeId, u32> {
        &self.min_multiplicity
    }
}

/// All occurrences of `q` in `g`, as induced subgraphs in deterministic
/// order. An empty result is valid.
pub fn match_query(g: &Multigraph, q: &QueryGraph) -> Vec<Subgraph> {
    let qn = q.graph.node_count();
    if qn == 0 || qn > g.node_count() {
        return Vec::new();
    }

    let plan = MatchPlan::build(q);
    let mut search = MatchSearch {
        g,
        plan: &plan,
        assignment: vec![usize::MAX; qn],
        used: vec![false; g.node_count()],
        found: BTreeSet::new(),
    };
    for root in 0..g.node_count() {
        search.try_assign(0, root);
    }

    search
        .found
        .into_iter()
        .map(|set| {
            let ids: Vec<&NodeId> = set.iter().map(|&i| g.node_id_at(i)).collect();
            g.induced_subgraph(ids).expect("hosts exist")
        })
        .collect()
}

/// Query vertices in a connected order, highest degree first, with the
/// pattern edges to check at each step.
struct MatchPlan {
    /// order[step] = query node index.
    order: Vec<usize>,
    /// Per step: (earlier step, required multiplicity) for each pattern edge
    /// from the step's vertex back into the mapped prefix.
    back_edges: Vec<Vec<(usize, u32)>>,
    /// Per step: simple degree of the query vertex, for host pruning.
    degree: Vec<usize>,
}

impl MatchPlan {
    fn build(q: &QueryGraph) -> Self {
        let g = q.graph();
        let n = g.node_count();
        let mut remaining: BTreeSet<usize> = (0..n).collect();
        let mut order = Vec::with_capacity(n);

        let start = (0..n)
            .max_by_key(|&v| (g.adjacency_at(v).len(), std::cmp::Reverse(v)))
            .expect("non-empty query");
        order.push(start);
        remaining.remove(&start);
        while !remaining.is_empty() {
            // Next: attached to the prefix, highest degree, smallest index.
            let next = remaining
                .iter()
                .copied()
                .filter(|&v| g.neighbor_set_at(v).iter().any(|w| order.contains(w)))
                .max_by_key(|&v| (g.adjacency_at(v).len(), std::cmp::Reverse(v)))
                .expect("query is connected");
            order.push(next);
            remaining.remove(&next);
        }

        let step_of: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(s, &v)| (v, s)).collect();
        let mut back_edges = vec![Vec::new(); n];
        for edge in g.edges() {
            let a = g.node_idx(&edge.src).expect("query node");
            let b = g.node_idx(&edge.dst).expect("query node");
            let (early, late) = if step_of[&a] < step_of[&b] {
                (a, b)
            } else {
                (b, a)
            };
            back_edges[step_of[&late]].push((step_of[&early], q.min_multiplicity(&edge.id)));
        }
        let degree = order.iter().map(|&v| g.neighbor_set_at(v).len()).collect();
        MatchPlan {
            order,
            back_edges,
            degree,
        }
    }
}

struct MatchSearch<'a> {
    g: &'a Multigraph,
    plan: &'a MatchPlan,
    assignment: Vec<usize>,
    used: Vec<bool>,
    found: BTreeSet<Vec<usize>>,
}

impl MatchSearch<'_> {
    fn try_assign(&mut self, step: usize, host: usize) {
        if self.used[host] {
            return;
        }
        if self.g.neighbor_set_at(host).len() < self.plan.degree[step] {
            return;
        }
        for &(earlier, need) in &self.plan.back_edges[step] {
            let other = self.assignment[earlier];
            if self.g.pair_mult_idx(host, other) < need {
                return;
            }
        }

        self.assignment[step] = host;
        if step + 1 == self.plan.order.len() {
            let mut set = self.assignment.clone();
            set.sort_unstable();
            self.found.insert(set);
        } else {
            self.used[host] = true;
            // Candidates: hosts adjacent to the image of the first mapped
            // query neighbor of the next vertex.
            let anchor = self.plan.back_edges[step + 1]
                .first()
                .map(|&(earlier, _)| self.assignment[earlier])
                .expect("connected order has a back edge");
            let neighbors: Vec<usize> = self.g.neighbor_set_at(anchor).to_vec();
            for candidate in neighbors {
                self.try_assign(step + 1, candidate);
            }
            self.used[host] = false;
        }
        self.assignment[step] = usize::MAX;
    }
}
