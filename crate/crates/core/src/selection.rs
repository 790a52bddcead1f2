//! First detection approach: generate candidate subgraphs, characterize
//! them, and keep those close enough to some training sample.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::{
    cosine_distance, subgraph_features, FeatureLevel, FeatureSchema, FeatureVector, Standardizer,
};
use crate::graph::{Multigraph, SgiSet};
use crate::lpa::{overlapping_label_propagation, LpaParams};
use crate::matching::match_query;
use crate::mcs::maximum_common_subgraph;

/// How candidate subgraphs are produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateGenerator {
    /// Overlapping label propagation over the whole graph.
    LabelPropagation(LpaParams),
    /// Match the samples' maximum common subgraph as a query.
    McsQuery,
}

/// Configuration for [`first_approach`].
#[derive(Debug, Clone)]
pub struct SelectionConfig {
    pub generator: CandidateGenerator,
    /// Subgraph-level schema used for candidates and samples alike.
    pub schema: FeatureSchema,
    /// Upper bound on the cosine distance to the nearest sample.
    pub gamma: f64,
}

impl SelectionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.gamma <= 0.0 {
            return Err(Error::InvalidConfig("gamma must be > 0".into()));
        }
        if self.schema.level() != FeatureLevel::Subgraph {
            return Err(Error::InvalidSchema(
                "selection needs a subgraph-level schema".into(),
            ));
        }
        if let CandidateGenerator::LabelPropagation(params) = &self.generator {
            params.validate()?;
        }
        Ok(())
    }
}

/// True iff some sample vector lies strictly within `gamma` of the
/// candidate. An empty sample list never passes.
pub fn check(candidate: &FeatureVector, samples: &[FeatureVector], gamma: f64) -> Result<bool> {
    for sample in samples {
        if cosine_distance(candidate, sample)? < gamma {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Run the configured generator and keep every candidate whose feature
/// vector passes [`check`] against the samples.
///
/// Candidates are not deduplicated against the samples: rediscovering a
/// training sample is a valid prediction.
pub fn first_approach(g: &Multigraph, samples: &SgiSet, cfg: &SelectionConfig) -> Result<SgiSet> {
    cfg.validate()?;
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    samples.validate_against(g)?;

    let candidates = match &cfg.generator {
        CandidateGenerator::LabelPropagation(params) => overlapping_label_propagation(g, params)?,
        CandidateGenerator::McsQuery => {
            let query = maximum_common_subgraph(g, samples)?;
            match_query(g, &query)
        }
    };

    // Sample vectors are fixed across the candidate loop; compute them once.
    let mut sample_vectors = samples
        .iter()
        .map(|s| subgraph_features(g, s, &cfg.schema))
        .collect::<Result<Vec<_>>>()?;
    let standardizer = if cfg.schema.standardize() {
        let std = Standardizer::fit(&sample_vectors)?;
        sample_vectors = sample_vectors
            .iter()
            .map(|v| std.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Some(std)
    } else {
        None
    };

    let mut selected = Vec::new();
    for candidate in candidates {
        let mut vector = subgraph_features(g, &candidate, &cfg.schema)?;
        if let Some(std) = &standardizer {
            vector = std.apply(&vector)?;
        }
        if check(&vector, &sample_vectors, cfg.gamma)? {
            selected.push(candidate);
        }
    }
    Ok(SgiSet::new(samples.goi_type.clone(), selected))
}
