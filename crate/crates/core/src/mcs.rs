//! Maximum common subgraph over a set of sample subgraphs, distilled into a
//! single query.
//!
//! The samples are folded left to right: the pattern so far is matched
//! against the next sample and shrunk to the largest connected structure
//! common to both. Common structure is measured on simple projections:
//! node count first, then edge count, with ties broken by the
//! lexicographically smallest sorted node-id set of the first operand (and
//! then the smallest edge set). Each query edge keeps the minimum
//! multiplicity that every mapped occurrence can support, so the query never
//! demands more parallel edges than any sample exhibits.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeRecord, Multigraph, NodeId, NodeRecord, SgiSet, Subgraph};
use crate::matching::QueryGraph;

/// Exact search is quadratic-exponential in sample size; keep samples small.
pub const MAX_MCS_SAMPLE_NODES: usize = 12;

/// Simple projection of a subgraph or pattern: node names, sorted adjacency,
/// and per-pair multiplicities.
struct SimpleView {
    names: Vec<NodeId>,
    adj: Vec<Vec<usize>>,
    mult: BTreeMap<(usize, usize), u32>,
}

impl SimpleView {
    fn node_count(&self) -> usize {
        self.names.len()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    fn multiplicity(&self, a: usize, b: usize) -> u32 {
        self.mult.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    fn from_subgraph(g: &Multigraph, s: &Subgraph) -> Result<Self> {
        g.validate_subgraph(s)?;
        let names: Vec<NodeId> = s.nodes().iter().cloned().collect();
        let index: BTreeMap<&NodeId, usize> =
            names.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let mut mult = BTreeMap::new();
        for id in s.edges() {
            let e = g.edge(id).expect("validated");
            let a = index[&e.src];
            let b = index[&e.dst];
            *mult.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        Ok(Self::assemble(names, mult))
    }

    fn assemble(names: Vec<NodeId>, mult: BTreeMap<(usize, usize), u32>) -> Self {
        let mut adj = vec![Vec::new(); names.len()];
        for &(a, b) in mult.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleView { names, adj, mult }
    }
}

/// Best common structure found so far: pattern vertices of the first
/// operand, the pattern's edges (as first-operand pairs), plus one witness
/// mapping into the second operand.
#[derive(Clone)]
struct CommonPattern {
    left_nodes: Vec<usize>,
    left_edges: Vec<(usize, usize)>,
    edge_count: usize,
}

impl CommonPattern {
    fn beats(&self, other: &Option<CommonPattern>) -> bool {
        let Some(best) = other else { return true };
        let by_size =
            (self.left_nodes.len(), self.edge_count).cmp(&(best.left_nodes.len(), best.edge_count));
        match by_size {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => match self.left_nodes.cmp(&best.left_nodes) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => self.left_edges < best.left_edges,
            },
        }
    }
}

/// Branch-and-bound over partial injective mappings between two simple
/// views. The pattern grows by vertex pairs; every added pair must share a
/// common edge with an already-mapped pair, which keeps the pattern
/// connected.
///
/// Duplicate orderings of the same pair set are avoided with the usual
/// connected-enumeration scheme: extensions are tried in a fixed order, and
/// each branch forbids the extensions its earlier siblings started with.
struct McsSearch<'a> {
    left: &'a SimpleView,
    right: &'a SimpleView,
    pairs: Vec<(usize, usize)>,
    used_left: Vec<bool>,
    used_right: Vec<bool>,
    best: Option<CommonPattern>,
}

impl McsSearch<'_> {
    fn run(left: &SimpleView, right: &SimpleView) -> Option<CommonPattern> {
        let nl = left.node_count();
        let nr = right.node_count();
        let mut search = McsSearch {
            left,
            right,
            pairs: Vec::new(),
            used_left: vec![false; nl],
            used_right: vec![false; nr],
            best: None,
        };
        let mut forbidden = vec![false; nl * nr];
        for u in 0..nl {
            for v in 0..nr {
                search.pairs.push((u, v));
                search.used_left[u] = true;
                search.used_right[v] = true;
                search.record(0);
                search.branch(0, &forbidden);
                search.used_left[u] = false;
                search.used_right[v] = false;
                search.pairs.pop();
                forbidden[u * nr + v] = true;
            }
        }
        search.best
    }

    fn branch(&mut self, edge_count: usize, forbidden: &[bool]) {
        let nr = self.right.node_count();
        // Bound: even pairing every unused vertex cannot beat the best.
        if let Some(best) = &self.best {
            let remaining_left = self.used_left.iter().filter(|&&u| !u).count();
            let remaining_right = self.used_right.iter().filter(|&&u| !u).count();
            if self.pairs.len() + remaining_left.min(remaining_right) < best.left_nodes.len() {
                return;
            }
        }

        let mut extensions: Vec<(usize, usize, usize)> = Vec::new();
        for u in 0..self.left.node_count() {
            if self.used_left[u] {
                continue;
            }
            for v in 0..nr {
                if self.used_right[v] || forbidden[u * nr + v] {
                    continue;
                }
                let gained = self.common_edges_with(u, v);
                if gained > 0 {
                    extensions.push((u, v, gained));
                }
            }
        }

        let mut child_forbidden = forbidden.to_vec();
        for &(u, v, gained) in &extensions {
            self.pairs.push((u, v));
            self.used_left[u] = true;
            self.used_right[v] = true;
            self.record(edge_count + gained);
            self.branch(edge_count + gained, &child_forbidden);
            self.used_left[u] = false;
            self.used_right[v] = false;
            self.pairs.pop();
            child_forbidden[u * nr + v] = true;
        }
    }

    fn common_edges_with(&self, u: usize, v: usize) -> usize {
        self.pairs
            .iter()
            .filter(|&&(pu, pv)| self.left.adjacent(u, pu) && self.right.adjacent(v, pv))
            .count()
    }

    fn record(&mut self, edge_count: usize) {
        if self.pairs.is_empty() {
            return;
        }
        if let Some(best) = &self.best {
            if self.pairs.len() < best.left_nodes.len() {
                return;
            }
        }
        let mut left_nodes: Vec<usize> = self.pairs.iter().map(|&(u, _)| u).collect();
        left_nodes.sort_unstable();
        let mut left_edges = Vec::with_capacity(edge_count);
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            for &(u2, v2) in &self.pairs[i + 1..] {
                if self.left.adjacent(u, u2) && self.right.adjacent(v, v2) {
                    left_edges.push((u.min(u2), u.max(u2)));
                }
            }
        }
        left_edges.sort_unstable();
        let candidate = CommonPattern {
            left_nodes,
            left_edges,
            edge_count,
        };
        if candidate.beats(&self.best) {
            self.best = Some(candidate);
        }
    }
}

/// Every injective mapping of `pattern` (nodes + required edges, as local
/// indices) into `host` that lands each pattern edge on an adjacent pair.
fn enumerate_embeddings(
    pattern_nodes: &[usize],
    pattern_edges: &[(usize, usize)],
    host: &SimpleView,
) -> Vec<BTreeMap<usize, usize>> {
    let mut out = Vec::new();
    let mut assignment: BTreeMap<usize, usize> = BTreeMap::new();
    let mut used = vec![false; host.node_count()];
    fn recurse(
        slot: usize,
        nodes: &[usize],
        edges: &[(usize, usize)],
        host: &SimpleView,
        assignment: &mut BTreeMap<usize, usize>,
        used: &mut [bool],
        out: &mut Vec<BTreeMap<usize, usize>>,
    ) {
        if slot == nodes.len() {
            out.push(assignment.clone());
            return;
        }
        let u = nodes[slot];
        'candidates: for v in 0..host.node_count() {
            if used[v] {
                continue;
            }
            for &(a, b) in edges {
                let other = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if let Some(&mapped) = assignment.get(&other) {
                    if !host.adjacent(v, mapped) {
                        continue 'candidates;
                    }
                }
            }
            assignment.insert(u, v);
            used[v] = true;
            recurse(slot + 1, nodes, edges, host, assignment, used, out);
            used[v] = false;
            assignment.remove(&u);
        }
    }
    recurse(
        0,
        pattern_nodes,
        pattern_edges,
        host,
        &mut assignment,
        &mut used,
        &mut out,
    );
    out
}

/// Distill one query from a set of samples by folding pairwise maximum
/// common subgraphs in list order.
///
/// Fails on an empty sample set, on samples beyond the exact-search bound,
/// and when a fold step finds no common edge.
pub fn maximum_common_subgraph(g: &Multigraph, samples: &SgiSet) -> Result<QueryGraph> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    for (i, s) in samples.iter().enumerate() {
        if s.node_count() > MAX_MCS_SAMPLE_NODES {
            return Err(Error::InvalidConfig(format!(
                "sample {i} has {} nodes; exact search is bounded at {MAX_MCS_SAMPLE_NODES}",
                s.node_count()
            )));
        }
    }

    let first = samples.iter().next().expect("nonempty");
    let mut acc = SimpleView::from_subgraph(g, first)?;

    for sample in samples.iter().skip(1) {
        let right = SimpleView::from_subgraph(g, sample)?;
        let best = McsSearch::run(&acc, &right).ok_or(Error::NoCommonStructure)?;
        if best.left_nodes.len() < 2 || best.edge_count == 0 {
            return Err(Error::NoCommonStructure);
        }

        // Per-edge bound: the accumulator's own bound capped by what the
        // witness occurrence in the new sample supports. Among the pattern's
        // occurrences, the witness is the one keeping the query most
        // specific (largest bound vector, ties by mapping order).
        let witness = enumerate_embeddings(&best.left_nodes, &best.left_edges, &right)
            .into_iter()
            .map(|mapping| {
                let mults: Vec<u32> = best
                    .left_edges
                    .iter()
                    .map(|&(a, b)| right.multiplicity(mapping[&a], mapping[&b]))
                    .collect();
                (mults, mapping)
            })
            .max_by(|(ma, mapa), (mb, mapb)| ma.cmp(mb).then_with(|| mapb.cmp(mapa)))
            .expect("the search mapping embeds the pattern");

        // Re-index the surviving vertices; `left_nodes` is sorted, and
        // `acc.names` is sorted, so the new name list stays sorted.
        let names: Vec<NodeId> = best
            .left_nodes
            .iter()
            .map(|&i| acc.names[i].clone())
            .collect();
        let slot_of: BTreeMap<usize, usize> = best
            .left_nodes
            .iter()
            .enumerate()
            .map(|(slot, &i)| (i, slot))
            .collect();
        let mult: BTreeMap<(usize, usize), u32> = best
            .left_edges
            .iter()
            .zip(&witness.0)
            .map(|(&(a, b), &m)| {
                let (sa, sb) = (slot_of[&a], slot_of[&b]);
                (
                    (sa.min(sb), sa.max(sb)),
                    acc.multiplicity(a, b).min(m).max(1),
                )
            })
            .collect();
        acc = SimpleView::assemble(names, mult);
    }
    query_from_view(&acc)
}

/// Query straight from one sample: its simple projection, with each edge
/// demanding the sample's own multiplicity.
fn query_from_view(view: &SimpleView) -> Result<QueryGraph> {
    let nodes = view
        .names
        .iter()
        .map(|n| NodeRecord::new(n.clone()))
        .collect();
    let mut edges = Vec::new();
    let mut min_mult = BTreeMap::new();
    for (k, (&(a, b), &m)) in view.mult.iter().enumerate() {
        let id = EdgeId::new(format!("q{k}"));
        edges.push(EdgeRecord::new(view.names[a].clone(), view.names[b].clone()).id(id.clone()));
        min_mult.insert(id, m.max(1));
    }
    QueryGraph::new(Multigraph::build(nodes, edges)?, min_mult)
}
