//! End-to-end tests of the `sgi` binary: exit codes, file handling, and the
//! generate / detect / evaluate round trip.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn sgi() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sgi"))
}

fn run(args: &[&str]) -> Output {
    sgi().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn workdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgi-cli-test-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(path: &Path, contents: &str) {
    std::fs::write(path, contents).unwrap();
}

const BENCH_CONFIG: &str = r#"{
  "background_nodes": 200,
  "background_edge_density": 3.0,
  "groups": 6,
  "group_size": [4, 7],
  "motif": "clique",
  "context": "square",
  "overlap_fraction": 0.0,
  "multiplicity": [2, 4],
  "attributes": {"mode": "separable"},
  "training_samples": 2,
  "seed": 7
}"#;

fn generate_into(dir: &Path) {
    let config = dir.join("bench.json");
    write(&config, BENCH_CONFIG);
    let out = run(&[
        "generate",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn missing_graph_file_exits_1_and_names_the_path() {
    let out = run(&[
        "detect",
        "--approach",
        "second",
        "--graph",
        "/nonexistent/g.json",
        "--samples",
        "/nonexistent/s.json",
        "--out",
        "/tmp/unused.json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("/nonexistent/g.json"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn empty_samples_exit_1_with_the_contract_message() {
    let dir = workdir("empty-samples");
    generate_into(&dir);
    let empty = dir.join("empty.json");
    write(&empty, r#"{"type": "t", "groups": []}"#);
    let out = run(&[
        "detect",
        "--approach",
        "second",
        "--graph",
        dir.join("graph.json").to_str().unwrap(),
        "--samples",
        empty.to_str().unwrap(),
        "--out",
        dir.join("pred.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("samples nonempty required"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn malformed_graph_exits_1() {
    let dir = workdir("malformed");
    let bad = dir.join("bad.json");
    write(&bad, "{ this is not json");
    let out = run(&[
        "detect",
        "--approach",
        "first",
        "--graph",
        bad.to_str().unwrap(),
        "--samples",
        bad.to_str().unwrap(),
        "--out",
        dir.join("pred.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("bad.json"));
}

#[test]
fn full_pipeline_reaches_perfect_scores_on_separable_data() {
    let dir = workdir("pipeline");
    generate_into(&dir);
    let out = run(&[
        "detect",
        "--approach",
        "second",
        "--strategy",
        "majority",
        "--feature-set",
        "attributes",
        "--gamma-node",
        "0.5",
        "--gamma-edge",
        "0.5",
        "--graph",
        dir.join("graph.json").to_str().unwrap(),
        "--samples",
        dir.join("samples.json").to_str().unwrap(),
        "--out",
        dir.join("pred.json").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let out = run(&[
        "evaluate",
        "--pred",
        dir.join("pred.json").to_str().unwrap(),
        "--truth",
        dir.join("truth.json").to_str().unwrap(),
        "--out",
        dir.join("report.json").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let table = stdout(&out);
    assert!(table.contains("precision                1.0000"), "{table}");
    assert!(table.contains("recall                   1.0000"), "{table}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["precision"], 1.0);
    assert_eq!(report["recall"], 1.0);
    assert_eq!(report["f_score"], 1.0);
}

#[test]
fn evaluating_truth_against_itself_is_perfect() {
    let dir = workdir("self-eval");
    generate_into(&dir);
    let truth = dir.join("truth.json");
    let out = run(&[
        "evaluate",
        "--pred",
        truth.to_str().unwrap(),
        "--truth",
        truth.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let table = stdout(&out);
    assert!(table.contains("precision                1.0000"), "{table}");
    assert!(table.contains("recall                   1.0000"), "{table}");
}

#[test]
fn detect_emits_parseable_artifacts_and_bad_sets() {
    let dir = workdir("artifacts");
    generate_into(&dir);
    let out = run(&[
        "detect",
        "--approach",
        "second",
        "--feature-set",
        "attributes",
        "--gamma-node",
        "0.5",
        "--gamma-edge",
        "0.5",
        "--emit-bad-sets",
        "--graph",
        dir.join("graph.json").to_str().unwrap(),
        "--samples",
        dir.join("samples.json").to_str().unwrap(),
        "--out",
        dir.join("pred.json").to_str().unwrap(),
        "--truth",
        dir.join("truth.json").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let pred: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("pred.json")).unwrap()).unwrap();
    assert!(pred["groups"].as_array().unwrap().len() >= 2);

    let bad: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("pred.bad_sets.json")).unwrap())
            .unwrap();
    assert!(bad["v_bad"].as_array().unwrap().len() >= 100);

    let report_path = dir.join("pred.report.json");
    assert!(report_path.exists());
}

#[test]
fn run_config_file_drives_detect_and_flags_override() {
    let dir = workdir("config-file");
    generate_into(&dir);
    let config = dir.join("run.json");
    write(
        &config,
        &format!(
            r#"{{
  "graph": "{g}",
  "samples": "{s}",
  "out": "{o}",
  "approach": "second",
  "seed": 3,
  "second": {{
    "strategy": "majority",
    "gamma_node": 0.5,
    "gamma_edge": 0.5,
    "feature_set": "attributes"
  }}
}}"#,
            g = dir.join("graph.json").display(),
            s = dir.join("samples.json").display(),
            o = dir.join("pred.json").display(),
        ),
    );
    let out = run(&["detect", "--config", config.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(dir.join("pred.json").exists());

    // A conflicting section for the other approach is a config error.
    let conflicted = dir.join("conflict.json");
    write(
        &conflicted,
        r#"{"approach": "second", "first": {"gamma": 0.2}, "second": {}}"#,
    );
    let out = run(&["detect", "--config", conflicted.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn features_dump_is_well_formed_csv() {
    let dir = workdir("features");
    generate_into(&dir);
    let out = run(&[
        "features",
        "--graph",
        dir.join("graph.json").to_str().unwrap(),
        "--level",
        "node",
        "--out",
        dir.join("nodes.csv").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.join("nodes.csv")).unwrap();
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("id,degree,"));
    let columns = header.split(',').count();
    for line in lines {
        assert_eq!(line.split(',').count(), columns, "{line}");
    }

    // Subgraph level needs the subgraph set.
    let out = run(&[
        "features",
        "--graph",
        dir.join("graph.json").to_str().unwrap(),
        "--level",
        "subgraph",
        "--subgraphs",
        dir.join("truth.json").to_str().unwrap(),
        "--feature-set",
        "metrics",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("id,node_count,edge_count"));
}

#[test]
fn runtime_failures_exit_2() {
    // Samples that share no structure make the query distillation fail at
    // runtime, after configuration checks passed.
    let dir = workdir("exit-2");
    let graph = dir.join("graph.json");
    write(
        &graph,
        r#"{
  "nodes": [{"id": "a"}, {"id": "b"}, {"id": "x"}, {"id": "y"}],
  "edges": [
    {"id": "e0", "src": "a", "dst": "b"},
    {"id": "e1", "src": "x", "dst": "y"}
  ]
}"#,
    );
    let samples = dir.join("samples.json");
    write(
        &samples,
        r#"{"type": "t", "groups": [{"nodes": ["a", "b"]}, {"nodes": ["a", "y"]}]}"#,
    );
    let out = run(&[
        "detect",
        "--approach",
        "first",
        "--generator",
        "mcs-query",
        "--graph",
        graph.to_str().unwrap(),
        "--samples",
        samples.to_str().unwrap(),
        "--out",
        dir.join("pred.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(
        stderr(&out).contains("share no structure"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn first_approach_with_mcs_query_runs_end_to_end() {
    let dir = workdir("mcs-query");
    let config = dir.join("bench.json");
    write(
        &config,
        r#"{
  "background_nodes": 150,
  "background_edge_density": 2.0,
  "groups": 5,
  "group_size": [4, 5],
  "motif": "hub",
  "context": "triangles",
  "overlap_fraction": 0.0,
  "multiplicity": [2, 3],
  "attributes": {"mode": "separable"},
  "training_samples": 2,
  "seed": 13
}"#,
    );
    let out = run(&[
        "generate",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let out = run(&[
        "detect",
        "--approach",
        "first",
        "--generator",
        "mcs-query",
        "--feature-set",
        "attributes",
        "--gamma",
        "0.3",
        "--graph",
        dir.join("graph.json").to_str().unwrap(),
        "--samples",
        dir.join("samples.json").to_str().unwrap(),
        "--out",
        dir.join("pred.json").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let pred: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("pred.json")).unwrap()).unwrap();
    assert!(!pred["groups"].as_array().unwrap().is_empty());
}
