//! Identify subgraphs of interest in transactional multigraphs from a small
//! set of known examples.
//!
//! Two detection approaches share one data model and one characterization
//! layer:
//!
//! * [`selection::first_approach`] generates candidate subgraphs (by
//!   overlapping label propagation or by matching a query distilled from the
//!   samples) and keeps the candidates whose feature vectors lie within a
//!   cosine-distance bound of some training sample.
//! * [`pruning::second_approach`] works in reverse: it predicts the nodes
//!   and edges that belong to no group, prunes them, and reads the surviving
//!   connected components as predictions.
//!
//! [`evaluation`] scores predictions against ground truth with thresholded
//! node-set matching, and [`synthesis`] generates seeded benchmarks with
//! planted groups for end-to-end testing.

pub mod error;
pub mod evaluation;
pub mod features;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod lpa;
pub mod matching;
pub mod mcs;
pub mod pruning;
pub mod selection;
pub mod synthesis;
mod union_find;

pub use error::{Error, Result};
pub use evaluation::{
    evaluate, f_score, match_subgraphs, precision, recall, relevant, CandidateRole, EvalReport,
    MatchThresholds,
};
pub use features::{
    cosine_distance, edge_features, node_features, subgraph_features, FeatureLevel, FeatureSchema,
    FeatureVector, Metric, Standardizer,
};
pub use graph::{
    AttrMap, AttrValue, Edge, EdgeId, EdgeRecord, Multigraph, NodeId, NodeRecord, SgiSet, Subgraph,
};
pub use lpa::{overlapping_label_propagation, LpaParams};
pub use matching::{match_query, QueryGraph};
pub use mcs::maximum_common_subgraph;
pub use pruning::{
    compute_bad_sets, edge_majority, prune, second_approach, BadSets, PruneConfig, PruneStrategy,
};
pub use selection::{check, first_approach, CandidateGenerator, SelectionConfig};
pub use synthesis::{
    generate_benchmark, sample_training_set, AttributeMode, Benchmark, BenchmarkConfig,
    ContextMotif, GroupMotif,
};
