//! End-to-end tests of the `tautcoh` binary: every subcommand is run as a
//! child process on small fixture files and judged by exit code and JSON
//! output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_tautcoh")
}

/// A scratch directory unique to one test.
fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tautcoh-cli-{}-{test}", std::process::id()));
    fs::create_dir_all(&dir).expect("create scratch dir");
    dir
}

fn write_file(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).expect("write fixture");
    path
}

/// Run the binary, returning (exit code, parsed stdout JSON, stderr).
fn run(dir: &Path, args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn tautcoh");
    let code = out.status.code().expect("exit code");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    let json = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(stdout.trim())
            .unwrap_or_else(|e| panic!("stdout is not JSON ({e}):\n{stdout}\n stderr: {stderr}"))
    };
    (code, json, stderr)
}

const U12: &str = r#"{"field": "Q", "rows": [[1, 1]]}"#;
const U24: &str = r#"{"field": "Q", "rows": [[1, 1, 1, 1], [0, 1, 2, 3]]}"#;
const K3: &str = r#"{"field": "Q", "rows": [[1, 1, 0], [-1, 0, 1], [0, -1, -1]]}"#;
const BOOLEAN2: &str = r#"{"field": "Q", "rows": [[1, 0], [0, 1]]}"#;

#[test]
fn corpus_make_prints_at_least_twenty_entries() {
    let dir = scratch("corpus-make");
    let (code, json, _) = run(&dir, &["corpus", "make"]);
    assert_eq!(code, 0);
    let entries = json["entries"].as_array().expect("entries array");
    assert!(entries.len() >= 20, "only {} entries", entries.len());
    // Writing to a file reports the count instead.
    let out = dir.join("corpus.json");
    let (code, json, _) = run(
        &dir,
        &["corpus", "make", "--out", out.to_str().unwrap()],
    );
    assert_eq!(code, 0);
    assert_eq!(json["entries"].as_u64().unwrap() as usize, entries.len());
    assert!(out.exists());
}

#[test]
fn cohomology_of_wedge_q_and_the_dimension_cache() {
    let dir = scratch("cohomology");
    let input = write_file(&dir, "u12.json", U12);
    let cache = dir.join("cache");
    let args = [
        "--cache",
        cache.to_str().unwrap(),
        "cohomology",
        "--input",
        input.to_str().unwrap(),
        "--expr",
        "wedge(1, Q)",
    ];
    let (code, json, _) = run(&dir, &args);
    assert_eq!(code, 0);
    assert_eq!(json["h"], serde_json::json!([2, 0]));
    assert_eq!(json["cached"], Value::Bool(false));
    assert!(json.get("by_weight").is_none(), "per-weight omitted by default");

    let (code, json, _) = run(&dir, &args);
    assert_eq!(code, 0);
    assert_eq!(json["h"], serde_json::json!([2, 0]));
    assert_eq!(json["cached"], Value::Bool(true));
}

#[test]
fn cohomology_per_weight_lists_weights() {
    let dir = scratch("per-weight");
    let input = write_file(&dir, "u12.json", U12);
    let (code, json, _) = run(
        &dir,
        &[
            "cohomology",
            "--input",
            input.to_str().unwrap(),
            "--expr",
            "Q",
            "--per-weight",
        ],
    );
    assert_eq!(code, 0);
    let lines = json["by_weight"].as_array().expect("by_weight array");
    assert!(!lines.is_empty());
}

#[test]
fn gf_routes_agree_on_the_quotient_spanning_polynomial() {
    let dir = scratch("gf");
    let input = write_file(&dir, "u24.json", U24);
    let (code, json, _) = run(
        &dir,
        &["gf", "--input", input.to_str().unwrap(), "--which", "ext-q"],
    );
    assert_eq!(code, 0);
    assert_eq!(json["agree"], Value::Bool(true));
    assert_eq!(
        json["routes"]["tutte"],
        serde_json::json!(["1", "4", "6"]),
        "spanning polynomial of the rank-2 uniform matroid on four elements"
    );
}

#[test]
fn fan_counts_cones() {
    let dir = scratch("fan");
    let (code, json, _) = run(&dir, &["fan", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json["cones"].as_u64(), Some(13));
    let (code, json, _) = run(&dir, &["fan", "--n", "2", "--list-cones"]);
    assert_eq!(code, 0);
    assert_eq!(json["cones"].as_u64(), Some(3));
    assert_eq!(json["partitions"].as_array().unwrap().len(), 3);
}

#[test]
fn fiber_check_passes_on_a_clean_example() {
    let dir = scratch("fiber");
    let input = write_file(&dir, "u24.json", U24);
    let (code, json, _) = run(&dir, &["fiber-check", "--input", input.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json["ok"], Value::Bool(true));
    assert_eq!(json["last_element_case"], Value::String("neither".into()));
}

#[test]
fn p1_single_bundle_and_summary() {
    let dir = scratch("p1");
    let input = write_file(&dir, "u12.json", U12);
    let (code, json, _) = run(
        &dir,
        &[
            "p1",
            "--input",
            input.to_str().unwrap(),
            "--n",
            "2",
            "--functor",
            "sym",
            "--p",
            "2",
            "--which",
            "S",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["ok"], Value::Bool(true));

    let (code, json, _) = run(
        &dir,
        &[
            "p1",
            "--input",
            input.to_str().unwrap(),
            "--functor",
            "wedge",
            "--p",
            "1",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["ok"], Value::Bool(true));

    // Mismatched --n is an input error.
    let (code, _, stderr) = run(
        &dir,
        &[
            "p1",
            "--input",
            input.to_str().unwrap(),
            "--n",
            "3",
            "--functor",
            "sym",
            "--p",
            "1",
        ],
    );
    assert_eq!(code, 2, "stderr: {stderr}");
}

#[test]
fn wonderful_log_canonical_counts_broken_circuit_free_sets() {
    let dir = scratch("log-canonical");
    let input = write_file(&dir, "k3.json", K3);
    let (code, json, _) = run(
        &dir,
        &[
            "wonderful",
            "--input",
            input.to_str().unwrap(),
            "--check",
            "log-canonical",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["h0"].as_u64(), Some(2));
    assert_eq!(json["matches"], Value::Bool(true));
}

#[test]
fn wonderful_immaculate_needs_and_uses_the_flag_file() {
    let dir = scratch("immaculate");
    let large = write_file(&dir, "plane.json", BOOLEAN2);
    let diagonal = write_file(&dir, "diag.json", r#"{"field": "Q", "rows": [[1, 1]]}"#);
    let axis = write_file(&dir, "axis.json", r#"{"field": "Q", "rows": [[1, 0]]}"#);

    // Without --flag: input error.
    let (code, _, _) = run(
        &dir,
        &[
            "wonderful",
            "--input",
            large.to_str().unwrap(),
            "--check",
            "immaculate",
        ],
    );
    assert_eq!(code, 2);

    // The diagonal line in the plane is immaculate.
    let (code, json, _) = run(
        &dir,
        &[
            "wonderful",
            "--input",
            large.to_str().unwrap(),
            "--check",
            "immaculate",
            "--flag",
            diagonal.to_str().unwrap(),
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["immaculate"], Value::Bool(true));
    assert_eq!(json["matches"], Value::Bool(true));

    // A coordinate axis is not, but the prediction agrees, so still exit 0.
    let (code, json, _) = run(
        &dir,
        &[
            "wonderful",
            "--input",
            large.to_str().unwrap(),
            "--check",
            "immaculate",
            "--flag",
            axis.to_str().unwrap(),
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["immaculate"], Value::Bool(false));
    assert_eq!(json["h0"].as_u64(), Some(1));
    assert_eq!(json["matches"], Value::Bool(true));
}

#[test]
fn wonderful_ideal_sheaf_and_speyer() {
    let dir = scratch("ideal-speyer");
    let input = write_file(&dir, "u12.json", U12);
    let (code, json, _) = run(
        &dir,
        &[
            "wonderful",
            "--input",
            input.to_str().unwrap(),
            "--check",
            "ideal-sheaf",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["matches"], Value::Bool(true));

    // Speyer is report-only: always exit 0, the signed value is printed.
    let (code, json, _) = run(
        &dir,
        &[
            "wonderful",
            "--input",
            input.to_str().unwrap(),
            "--check",
            "speyer",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["signed"].as_i64(), Some(1));
}

#[test]
fn verify_runs_a_suite_on_a_tiny_corpus() {
    let dir = scratch("verify-corpus");
    // A one-entry corpus: the rank-1 uniform matroid on two elements.
    let corpus = write_file(
        &dir,
        "tiny.json",
        r#"{"entries": [{"name": "tiny", "provenance": "uniform", "field": "Q",
            "rows": [[1, 1]], "ground": 2, "bases": [1, 2]}]}"#,
    );
    let (code, json, _) = run(
        &dir,
        &["verify", "thm12", "--corpus", corpus.to_str().unwrap()],
    );
    assert_eq!(code, 0);
    assert_eq!(json["ok"], Value::Bool(true));
    assert_eq!(json["suite"], Value::String("thm12".into()));
    assert!(json["passed"].as_u64().unwrap() >= 1);
}

#[test]
fn verify_runs_a_suite_on_a_single_input() {
    let dir = scratch("verify-input");
    let input = write_file(&dir, "u12.json", U12);
    let (code, json, _) = run(
        &dir,
        &["verify", "p1", "--input", input.to_str().unwrap()],
    );
    assert_eq!(code, 0);
    assert_eq!(json["ok"], Value::Bool(true));
    assert!(json["passed"].as_u64().unwrap() >= 1);
}

#[test]
fn verify_rejects_unknown_suites_and_missing_files() {
    let dir = scratch("verify-bad");
    let corpus = write_file(
        &dir,
        "tiny.json",
        r#"{"entries": [{"name": "tiny", "provenance": "uniform", "field": "Q",
            "rows": [[1, 1]], "ground": 2, "bases": [1, 2]}]}"#,
    );
    let (code, _, stderr) = run(
        &dir,
        &["verify", "thm99", "--corpus", corpus.to_str().unwrap()],
    );
    assert_eq!(code, 2, "stderr: {stderr}");

    let (code, _, _) = run(&dir, &["cohomology", "--input", "no-such.json", "--expr", "Q"]);
    assert_eq!(code, 2);

    // Corrupted corpus (bases that contradict the rows) is an input error.
    let bad = write_file(
        &dir,
        "bad.json",
        r#"{"entries": [{"name": "bad", "provenance": "uniform", "field": "Q",
            "rows": [[1, 1]], "ground": 2, "bases": [3]}]}"#,
    );
    let (code, _, _) = run(&dir, &["verify", "thm12", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn json_out_writes_the_same_document() {
    let dir = scratch("json-out");
    let out = dir.join("fan.json");
    let (code, json, _) = run(
        &dir,
        &["--json-out", out.to_str().unwrap(), "fan", "--n", "3"],
    );
    assert_eq!(code, 0);
    let written: Value =
        serde_json::from_str(&fs::read_to_string(&out).expect("json-out file")).expect("json");
    assert_eq!(json, written);
}

#[test]
fn field_flag_controls_the_computation_field() {
    let dir = scratch("field-flag");
    // No field label in the file: the --field flag decides.
    let input = write_file(&dir, "plain.json", r#"{"rows": [[1, 1, 1]]}"#);
    let (code, json, _) = run(
        &dir,
        &[
            "--field",
            "F3",
            "cohomology",
            "--input",
            input.to_str().unwrap(),
            "--expr",
            "O",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json["field"], Value::String("F3".into()));
    assert_eq!(json["h"], serde_json::json!([1, 0, 0]));

    let (code, _, _) = run(
        &dir,
        &[
            "--field",
            "F4",
            "cohomology",
            "--input",
            input.to_str().unwrap(),
            "--expr",
            "O",
        ],
    );
    assert_eq!(code, 2, "composite modulus is rejected");
}
