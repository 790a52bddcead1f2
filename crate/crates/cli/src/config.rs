//! Run configuration: a JSON file mirroring the detect flags, with flags
//! taking precedence over file values and defaults filling the rest.

use serde::{Deserialize, Serialize};
use sgi_core::{FeatureLevel, FeatureSchema, LpaParams, Multigraph, PruneStrategy};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Approach {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    Lpa,
    McsQuery,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum StrategyKind {
    Simple,
    Node,
    Edge,
    Majority,
}

impl From<StrategyKind> for PruneStrategy {
    fn from(kind: StrategyKind) -> Self {
        match kind {
            StrategyKind::Simple => PruneStrategy::Simple,
            StrategyKind::Node => PruneStrategy::Node,
            StrategyKind::Edge => PruneStrategy::Edge,
            StrategyKind::Majority => PruneStrategy::Majority,
        }
    }
}

/// Which feature dimensions a schema carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum FeatureSet {
    /// Structural metrics only.
    Metrics,
    /// Attribute dimensions only.
    Attributes,
    /// Metrics plus attributes.
    Full,
}

impl FeatureSet {
    pub fn schema(
        self,
        level: FeatureLevel,
        graph: &Multigraph,
        standardize: bool,
    ) -> CliResult<FeatureSchema> {
        let schema = match self {
            FeatureSet::Metrics => Ok(FeatureSchema::structural(level)),
            FeatureSet::Attributes => FeatureSchema::attributes_only(level, graph),
            FeatureSet::Full => FeatureSchema::full(level, graph),
        };
        schema
            .map(|s| s.with_standardize(standardize))
            .map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FirstSection {
    pub generator: Option<GeneratorKind>,
    pub gamma: Option<f64>,
    pub lpa_iterations: Option<usize>,
    pub lpa_threshold: Option<f64>,
    pub feature_set: Option<FeatureSet>,
    pub standardize: Option<bool>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SecondSection {
    pub strategy: Option<StrategyKind>,
    pub gamma_node: Option<f64>,
    pub gamma_edge: Option<f64>,
    pub min_component_size: Option<usize>,
    pub feature_set: Option<FeatureSet>,
    pub standardize: Option<bool>,
    pub emit_bad_sets: Option<bool>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvaluationSection {
    pub gamma_extra: Option<f64>,
    pub gamma_missing: Option<f64>,
    pub gamma_size: Option<f64>,
    pub beta: Option<f64>,
}

/// The on-disk run configuration. Every field is optional; detect flags
/// override whatever is present.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigFile {
    pub graph: Option<String>,
    pub samples: Option<String>,
    pub truth: Option<String>,
    pub out: Option<String>,
    pub seed: Option<u64>,
    pub approach: Option<Approach>,
    pub first: Option<FirstSection>,
    pub second: Option<SecondSection>,
    pub evaluation: Option<EvaluationSection>,
}

impl RunConfigFile {
    pub fn validate(&self) -> CliResult<()> {
        if self.first.is_some() && self.second.is_some() {
            return Err(CliError::Config(
                "exactly one approach section (first or second) may be present".into(),
            ));
        }
        match (self.approach, &self.first, &self.second) {
            (Some(Approach::First), _, Some(_)) => Err(CliError::Config(
                "approach is `first` but a `second` section is present".into(),
            )),
            (Some(Approach::Second), Some(_), _) => Err(CliError::Config(
                "approach is `second` but a `first` section is present".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Settings for the first approach after merging defaults, file, and flags.
#[derive(Debug, Clone)]
pub struct FirstSettings {
    pub generator: GeneratorKind,
    pub gamma: f64,
    pub lpa: LpaParams,
    pub feature_set: FeatureSet,
    pub standardize: bool,
}

/// Settings for the second approach after merging.
#[derive(Debug, Clone)]
pub struct SecondSettings {
    pub strategy: StrategyKind,
    pub gamma_node: f64,
    pub gamma_edge: f64,
    pub min_component_size: usize,
    pub feature_set: FeatureSet,
    pub standardize: bool,
    pub emit_bad_sets: bool,
}

#[derive(Debug, Clone)]
pub struct EvalSettings {
    pub gamma_extra: f64,
    pub gamma_missing: f64,
    pub gamma_size: f64,
    pub beta: f64,
}

impl EvalSettings {
    pub fn resolve(section: Option<&EvaluationSection>, flags: &EvaluationSection) -> Self {
        let pick = |flag: Option<f64>, file: fn(&EvaluationSection) -> Option<f64>, def: f64| {
            flag.or_else(|| section.and_then(file)).unwrap_or(def)
        };
        EvalSettings {
            gamma_extra: pick(flags.gamma_extra, |s| s.gamma_extra, 0.3),
            gamma_missing: pick(flags.gamma_missing, |s| s.gamma_missing, 0.3),
            gamma_size: pick(flags.gamma_size, |s| s.gamma_size, 0.3),
            beta: pick(flags.beta, |s| s.beta, 1.0),
        }
    }
}

pub fn resolve_first(
    section: Option<&FirstSection>,
    flags: &FirstSection,
    seed: u64,
) -> FirstSettings {
    FirstSettings {
        generator: flags
            .generator
            .or_else(|| section.and_then(|s| s.generator))
            .unwrap_or(GeneratorKind::Lpa),
        gamma: flags
            .gamma
            .or_else(|| section.and_then(|s| s.gamma))
            .unwrap_or(0.3),
        lpa: LpaParams {
            iterations: flags
                .lpa_iterations
                .or_else(|| section.and_then(|s| s.lpa_iterations))
                .unwrap_or(30),
            membership_threshold: flags
                .lpa_threshold
                .or_else(|| section.and_then(|s| s.lpa_threshold))
                .unwrap_or(0.3),
            seed,
        },
        feature_set: flags
            .feature_set
            .or_else(|| section.and_then(|s| s.feature_set))
            .unwrap_or(FeatureSet::Full),
        standardize: flags
            .standardize
            .or_else(|| section.and_then(|s| s.standardize))
            .unwrap_or(false),
    }
}

pub fn resolve_second(section: Option<&SecondSection>, flags: &SecondSection) -> SecondSettings {
    SecondSettings {
        strategy: flags
            .strategy
            .or_else(|| section.and_then(|s| s.strategy))
            .unwrap_or(StrategyKind::Majority),
        gamma_node: flags
            .gamma_node
            .or_else(|| section.and_then(|s| s.gamma_node))
            .unwrap_or(0.3),
        gamma_edge: flags
            .gamma_edge
            .or_else(|| section.and_then(|s| s.gamma_edge))
            .unwrap_or(0.3),
        min_component_size: flags
            .min_component_size
            .or_else(|| section.and_then(|s| s.min_component_size))
            .unwrap_or(2),
        feature_set: flags
            .feature_set
            .or_else(|| section.and_then(|s| s.feature_set))
            .unwrap_or(FeatureSet::Full),
        standardize: flags
            .standardize
            .or_else(|| section.and_then(|s| s.standardize))
            .unwrap_or(false),
        emit_bad_sets: flags
            .emit_bad_sets
            .or_else(|| section.and_then(|s| s.emit_bad_sets))
            .unwrap_or(false),
    }
}
