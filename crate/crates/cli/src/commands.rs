//! The four subcommands: generate, detect, evaluate, features.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Args;
use sgi_core::{
    evaluate, first_approach, io, BenchmarkConfig, CandidateGenerator, FeatureLevel,
    MatchThresholds, Multigraph, PruneConfig, SelectionConfig, SgiSet,
};

use crate::config::{
    resolve_first, resolve_second, Approach, EvalSettings, EvaluationSection, FeatureSet,
    FirstSection, GeneratorKind, RunConfigFile, SecondSection, StrategyKind,
};
use crate::error::{CliError, CliResult};
use crate::fsio::{read_to_string, write_atomic};
use crate::logging::{debug, info};

/// Map a core error: invalid configurations and schemas are user mistakes,
/// everything else failed at runtime.
fn core_err(err: sgi_core::Error) -> CliError {
    use sgi_core::Error::*;
    match err {
        InvalidConfig(_) | InvalidSchema(_) | InvalidQuery(_) => CliError::Config(err.to_string()),
        _ => CliError::Runtime(err.to_string()),
    }
}

fn load_graph(path: &Path) -> CliResult<Multigraph> {
    let text = read_to_string(path)?;
    io::graph_from_json(&text)
        .map_err(|e| CliError::Config(format!("invalid graph `{}`: {e}", path.display())))
}

fn load_samples(path: &Path, graph: &Multigraph) -> CliResult<SgiSet> {
    let text = read_to_string(path)?;
    let samples = io::sgi_set_from_json(&text, graph)
        .map_err(|e| CliError::Config(format!("invalid samples `{}`: {e}", path.display())))?;
    if samples.is_empty() {
        return Err(CliError::Config(format!(
            "samples nonempty required (`{}`)",
            path.display()
        )));
    }
    Ok(samples)
}

/// Replace a `.json` suffix (or append) to derive sibling artifact paths.
fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let s = path.to_string_lossy();
    let stem = s.strip_suffix(".json").unwrap_or(&s);
    PathBuf::from(format!("{stem}.{suffix}"))
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Benchmark configuration file (JSON).
    #[arg(long)]
    pub config: PathBuf,
    /// Output directory for graph.json, truth.json, and samples.json.
    #[arg(long)]
    pub out: PathBuf,
    /// Override the config file's seed.
    #[arg(long)]
    pub seed: Option<u64>,
}

pub fn generate(args: &GenerateArgs) -> CliResult<()> {
    let started = Instant::now();
    let text = read_to_string(&args.config)?;
    let mut cfg: BenchmarkConfig = serde_json::from_str(&text).map_err(|e| {
        CliError::Config(format!("invalid config `{}`: {e}", args.config.display()))
    })?;
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let bench = sgi_core::generate_benchmark(&cfg).map_err(core_err)?;

    write_atomic(
        &args.out.join("graph.json"),
        &io::graph_to_json(&bench.graph),
    )?;
    write_atomic(
        &args.out.join("truth.json"),
        &io::sgi_set_to_json(&bench.truth),
    )?;
    write_atomic(
        &args.out.join("samples.json"),
        &io::sgi_set_to_json(&bench.samples),
    )?;
    info!(
        "generated {} nodes, {} edges, {} groups ({} samples) in {:?}",
        bench.graph.node_count(),
        bench.graph.edge_count(),
        bench.truth.len(),
        bench.samples.len(),
        started.elapsed()
    );
    Ok(())
}

#[derive(Args, Debug, Default)]
pub struct DetectArgs {
    /// Input graph (JSON).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Training samples (subgraph-set JSON).
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// Run configuration file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Where to write the predicted subgraph set.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Ground truth; when given, an evaluation report is also produced.
    #[arg(long)]
    pub truth: Option<PathBuf>,
    #[arg(long)]
    pub approach: Option<Approach>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Which dimensions the feature schemas carry.
    #[arg(long)]
    pub feature_set: Option<FeatureSet>,
    /// Standardize feature vectors with sample statistics.
    #[arg(long)]
    pub standardize: bool,

    // first approach
    #[arg(long)]
    pub generator: Option<GeneratorKind>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub lpa_iterations: Option<usize>,
    #[arg(long)]
    pub lpa_threshold: Option<f64>,

    // second approach
    #[arg(long)]
    pub strategy: Option<StrategyKind>,
    #[arg(long)]
    pub gamma_node: Option<f64>,
    #[arg(long)]
    pub gamma_edge: Option<f64>,
    #[arg(long)]
    pub min_component_size: Option<usize>,
    /// Also dump the bad sets next to the prediction file.
    #[arg(long)]
    pub emit_bad_sets: bool,

    // evaluation thresholds (used when --truth is given)
    #[arg(long)]
    pub gamma_extra: Option<f64>,
    #[arg(long)]
    pub gamma_missing: Option<f64>,
    #[arg(long)]
    pub gamma_size: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
}

pub fn detect(args: &DetectArgs) -> CliResult<()> {
    let started = Instant::now();
    let file = match &args.config {
        Some(path) => {
            let text = read_to_string(path)?;
            let file: RunConfigFile = serde_json::from_str(&text).map_err(|e| {
                CliError::Config(format!("invalid config `{}`: {e}", path.display()))
            })?;
            file.validate()?;
            file
        }
        None => RunConfigFile::default(),
    };

    let require_path = |flag: &Option<PathBuf>, config_value: &Option<String>, name: &str| {
        flag.clone()
            .or_else(|| config_value.as_ref().map(PathBuf::from))
            .ok_or_else(|| CliError::Config(format!("--{name} is required")))
    };
    let graph_path = require_path(&args.graph, &file.graph, "graph")?;
    let samples_path = require_path(&args.samples, &file.samples, "samples")?;
    let out_path = require_path(&args.out, &file.out, "out")?;
    let truth_path = args
        .truth
        .clone()
        .or_else(|| file.truth.as_ref().map(PathBuf::from));

    let approach = args
        .approach
        .or(file.approach)
        .ok_or_else(|| CliError::Config("--approach is required (first | second)".into()))?;
    let seed = args.seed.or(file.seed).unwrap_or(0);

    let graph = load_graph(&graph_path)?;
    let samples = load_samples(&samples_path, &graph)?;
    info!(
        "graph: {} nodes, {} edges; samples: {}",
        graph.node_count(),
        graph.edge_count(),
        samples.len()
    );

    let predictions = match approach {
        Approach::First => {
            let flags = FirstSection {
                generator: args.generator,
                gamma: args.gamma,
                lpa_iterations: args.lpa_iterations,
                lpa_threshold: args.lpa_threshold,
                feature_set: args.feature_set,
                standardize: args.standardize.then_some(true),
            };
            let settings = resolve_first(file.first.as_ref(), &flags, seed);
            run_first(&graph, &samples, &settings)?
        }
        Approach::Second => {
            let flags = SecondSection {
                strategy: args.strategy,
                gamma_node: args.gamma_node,
                gamma_edge: args.gamma_edge,
                min_component_size: args.min_component_size,
                feature_set: args.feature_set,
                standardize: args.standardize.then_some(true),
                emit_bad_sets: args.emit_bad_sets.then_some(true),
            };
            let settings = resolve_second(file.second.as_ref(), &flags);
            run_second(&graph, &samples, &settings, &out_path)?
        }
    };

    write_atomic(&out_path, &io::sgi_set_to_json(&predictions))?;
    info!(
        "wrote {} predictions to `{}` in {:?}",
        predictions.len(),
        out_path.display(),
        started.elapsed()
    );

    if let Some(truth_path) = truth_path {
        let truth_text = read_to_string(&truth_path)?;
        let truth = io::sgi_set_from_json_nodes_only(&truth_text).map_err(|e| {
            CliError::Config(format!("invalid truth `{}`: {e}", truth_path.display()))
        })?;
        let eval = EvalSettings::resolve(
            file.evaluation.as_ref(),
            &EvaluationSection {
                gamma_extra: args.gamma_extra,
                gamma_missing: args.gamma_missing,
                gamma_size: args.gamma_size,
                beta: args.beta,
            },
        );
        let thresholds =
            MatchThresholds::new(eval.gamma_extra, eval.gamma_missing, eval.gamma_size);
        let report =
            evaluate(&predictions, &truth, &thresholds, eval.beta).map_err(CliError::runtime)?;
        print!("{}", report.to_table());
        let report_path = sibling(&out_path, "report.json");
        let mut json = serde_json::to_string_pretty(&report).map_err(CliError::runtime)?;
        json.push('\n');
        write_atomic(&report_path, &json)?;
        info!("wrote report to `{}`", report_path.display());
    }
    Ok(())
}

fn run_first(
    graph: &Multigraph,
    samples: &SgiSet,
    settings: &crate::config::FirstSettings,
) -> CliResult<SgiSet> {
    let schema =
        settings
            .feature_set
            .schema(FeatureLevel::Subgraph, graph, settings.standardize)?;
    let (generator, samples_in_order) = match settings.generator {
        GeneratorKind::Lpa => (
            CandidateGenerator::LabelPropagation(settings.lpa),
            samples.clone(),
        ),
        GeneratorKind::McsQuery => {
            // Fold order matters for the query distillation; size-descending
            // is the stable choice.
            let mut ordered = samples.clone();
            ordered
                .members
                .sort_by_key(|s| (std::cmp::Reverse(s.node_count()), s.sorted_node_ids()));
            (CandidateGenerator::McsQuery, ordered)
        }
    };
    let cfg = SelectionConfig {
        generator,
        schema,
        gamma: settings.gamma,
    };
    debug!("selection gamma: {}", settings.gamma);
    let found = first_approach(graph, &samples_in_order, &cfg).map_err(core_err)?;
    info!("selection kept {} candidates", found.len());
    Ok(found)
}

fn run_second(
    graph: &Multigraph,
    samples: &SgiSet,
    settings: &crate::config::SecondSettings,
    out_path: &Path,
) -> CliResult<SgiSet> {
    let cfg = PruneConfig {
        node_schema: settings.feature_set.schema(
            FeatureLevel::Node,
            graph,
            settings.standardize,
        )?,
        edge_schema: settings.feature_set.schema(
            FeatureLevel::Edge,
            graph,
            settings.standardize,
        )?,
        gamma_node: settings.gamma_node,
        gamma_edge: settings.gamma_edge,
        strategy: settings.strategy.into(),
        min_component_size: settings.min_component_size,
    };
    let bad = sgi_core::compute_bad_sets(graph, samples, &cfg).map_err(core_err)?;
    info!(
        "bad sets: {} nodes, {} edges",
        bad.v_bad.len(),
        bad.e_bad.len()
    );
    if settings.emit_bad_sets {
        let path = sibling(out_path, "bad_sets.json");
        let mut json = serde_json::to_string_pretty(&bad).map_err(CliError::runtime)?;
        json.push('\n');
        write_atomic(&path, &json)?;
        info!("wrote bad sets to `{}`", path.display());
    }
    let mut predicted = sgi_core::pruning::components_of_pruned(graph, &bad, &cfg);
    predicted.goi_type = samples.goi_type.clone();
    Ok(predicted)
}

#[derive(Args, Debug)]
pub struct EvaluateArgs {
    /// Predicted subgraph set (JSON).
    #[arg(long)]
    pub pred: PathBuf,
    /// Ground-truth subgraph set (JSON).
    #[arg(long)]
    pub truth: PathBuf,
    #[arg(long)]
    pub gamma_extra: Option<f64>,
    #[arg(long)]
    pub gamma_missing: Option<f64>,
    #[arg(long)]
    pub gamma_size: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Write the report as JSON here as well.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn evaluate_cmd(args: &EvaluateArgs) -> CliResult<()> {
    let pred_text = read_to_string(&args.pred)?;
    let preds = io::sgi_set_from_json_nodes_only(&pred_text).map_err(|e| {
        CliError::Config(format!(
            "invalid predictions `{}`: {e}",
            args.pred.display()
        ))
    })?;
    let truth_text = read_to_string(&args.truth)?;
    let truth = io::sgi_set_from_json_nodes_only(&truth_text)
        .map_err(|e| CliError::Config(format!("invalid truth `{}`: {e}", args.truth.display())))?;

    let eval = EvalSettings::resolve(
        None,
        &EvaluationSection {
            gamma_extra: args.gamma_extra,
            gamma_missing: args.gamma_missing,
            gamma_size: args.gamma_size,
            beta: args.beta,
        },
    );
    let thresholds = MatchThresholds::new(eval.gamma_extra, eval.gamma_missing, eval.gamma_size);
    let report = evaluate(&preds, &truth, &thresholds, eval.beta).map_err(CliError::runtime)?;
    print!("{}", report.to_table());
    if let Some(out) = &args.out {
        let mut json = serde_json::to_string_pretty(&report).map_err(CliError::runtime)?;
        json.push('\n');
        write_atomic(out, &json)?;
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct FeaturesArgs {
    /// Input graph (JSON).
    #[arg(long)]
    pub graph: PathBuf,
    /// Which level to characterize.
    #[arg(long, value_enum)]
    pub level: LevelArg,
    /// Subgraph set to characterize (required for --level subgraph).
    #[arg(long)]
    pub subgraphs: Option<PathBuf>,
    #[arg(long)]
    pub feature_set: Option<FeatureSet>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LevelArg {
    Subgraph,
    Node,
    Edge,
}

pub fn features(args: &FeaturesArgs) -> CliResult<()> {
    let graph = load_graph(&args.graph)?;
    let level = match args.level {
        LevelArg::Subgraph => FeatureLevel::Subgraph,
        LevelArg::Node => FeatureLevel::Node,
        LevelArg::Edge => FeatureLevel::Edge,
    };
    let schema = args
        .feature_set
        .unwrap_or(FeatureSet::Full)
        .schema(level, &graph, false)?;

    let mut csv = String::new();
    csv.push_str("id");
    for name in schema.dimension_names() {
        csv.push(',');
        csv.push_str(&name);
    }
    csv.push('\n');

    let mut push_row = |id: &str, values: &[f64]| {
        csv.push_str(id);
        for v in values {
            csv.push(',');
            csv.push_str(&format!("{v}"));
        }
        csv.push('\n');
    };

    match level {
        FeatureLevel::Node => {
            for id in graph.node_ids() {
                let v = sgi_core::node_features(&graph, id, &schema).map_err(CliError::runtime)?;
                push_row(id.as_str(), &v.values);
            }
        }
        FeatureLevel::Edge => {
            for edge in graph.edges() {
                let v = sgi_core::edge_features(&graph, &edge.id, &schema)
                    .map_err(CliError::runtime)?;
                push_row(edge.id.as_str(), &v.values);
            }
        }
        FeatureLevel::Subgraph => {
            let path = args.subgraphs.as_ref().ok_or_else(|| {
                CliError::Config("--subgraphs is required for --level subgraph".into())
            })?;
            let text = read_to_string(path)?;
            let set = io::sgi_set_from_json(&text, &graph).map_err(|e| {
                CliError::Config(format!("invalid subgraphs `{}`: {e}", path.display()))
            })?;
            for (i, member) in set.iter().enumerate() {
                let v = sgi_core::subgraph_features(&graph, member, &schema)
                    .map_err(CliError::runtime)?;
                push_row(&format!("group{i}"), &v.values);
            }
        }
    }

    match &args.out {
        Some(path) => write_atomic(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}
