//! End-to-end tests of the binary: documented examples, exit codes, error
//! records, file-format validation, and output round trips.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn tracekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tracekit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "expected success, stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON document")
}

fn stderr_record(output: &Output) -> Value {
    serde_json::from_slice(&output.stderr).expect("stderr carries a JSON error record")
}

fn write_file(dir: &TempDir, name: &str, contents: &Value) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string_pretty(contents).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

fn rational_matrix_file(dir: &TempDir, name: &str, n: usize, entries: &[&str]) -> String {
    let rows: Vec<Vec<&str>> = entries.chunks(n).map(|c| c.to_vec()).collect();
    write_file(
        dir,
        name,
        &json!({ "n": n, "mode": "rational", "entries": rows }),
    )
}

#[test]
fn charpoly_of_identity() {
    let dir = TempDir::new().unwrap();
    let path = rational_matrix_file(
        &dir,
        "id3.mat",
        3,
        &["1", "0", "0", "0", "1", "0", "0", "0", "1"],
    );
    let doc = stdout_json(&tracekit(&["charpoly", "--input", &path]));
    assert_eq!(doc["coefficients"], json!(["-3", "3", "-1"]));
    assert_eq!(doc["mode"], "rational");
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn rationals_are_normalized_on_ingestion() {
    let dir = TempDir::new().unwrap();
    let path = rational_matrix_file(&dir, "unnormalized.mat", 2, &["6/-4", "0", "0", "2/4"]);
    let doc = stdout_json(&tracekit(&["invert", "--input", &path]));
    // 6/-4 is stored as -3/2, 2/4 as 1/2; the inverse shows lowest terms too.
    assert_eq!(doc["entries"], json!([["-2/3", "0"], ["0", "2"]]));
    let doc = stdout_json(&tracekit(&["det", "--input", &path]));
    assert_eq!(doc["determinant"], "-3/4");
}

#[test]
fn gen_formula_canonical_document() {
    let doc = stdout_json(&tracekit(&["gen-formula", "--k", "3"]));
    assert_eq!(
        doc["terms"],
        json!([
            { "partition": [[3, 1]], "coefficient": "-1/3" },
            { "partition": [[1, 1], [2, 1]], "coefficient": "1/2" },
            { "partition": [[1, 3]], "coefficient": "-1/6" },
        ])
    );
    assert_eq!(doc["k"], 3);
}

#[test]
fn resolvent_at_spectrum_point_is_a_contract_error() {
    let dir = TempDir::new().unwrap();
    let path = rational_matrix_file(&dir, "diag12.mat", 2, &["1", "0", "0", "2"]);
    let output = tracekit(&["resolvent", "--input", &path, "--z", "2"]);
    assert_eq!(output.status.code(), Some(4));
    let record = stderr_record(&output);
    assert_eq!(record["error"]["kind"], "contract");
    assert_eq!(record["error"]["code"], "spectrum-point");
}

#[test]
fn singular_matrix_is_a_contract_error() {
    let dir = TempDir::new().unwrap();
    let path = rational_matrix_file(&dir, "nilpotent.mat", 2, &["0", "1", "0", "0"]);
    let output = tracekit(&["invert", "--input", &path]);
    assert_eq!(output.status.code(), Some(4));
    assert_eq!(stderr_record(&output)["error"]["code"], "singular-matrix");
}

#[test]
fn ragged_row_is_a_parse_error_naming_the_row() {
    let dir = TempDir::new().unwrap();
    let path = write_file(
        &dir,
        "ragged.mat",
        &json!({ "n": 3, "mode": "rational", "entries": [["1","0","0"], ["0","1"], ["0","0","1"]] }),
    );
    let output = tracekit(&["charpoly", "--input", &path]);
    assert_eq!(output.status.code(), Some(3));
    let record = stderr_record(&output);
    assert_eq!(record["error"]["kind"], "parse");
    let message = record["error"]["message"].as_str().unwrap();
    assert!(message.contains("row 1"), "message was: {message}");
    assert!(message.contains("expected 3"), "message was: {message}");
}

#[test]
fn bad_entry_is_a_parse_error_naming_row_and_column() {
    let dir = TempDir::new().unwrap();
    let path = write_file(
        &dir,
        "bad_entry.mat",
        &json!({ "n": 2, "mode": "rational", "entries": [["1", "2"], ["x", "1"]] }),
    );
    let output = tracekit(&["det", "--input", &path]);
    assert_eq!(output.status.code(), Some(3));
    let message = stderr_record(&output)["error"]["message"]
        .as_str()
        .unwrap()
        .to_string();
    assert!(message.contains("(1,0)"), "message was: {message}");
}

#[test]
fn asymmetric_perturbation_is_a_parse_error_naming_the_pair() {
    let dir = TempDir::new().unwrap();
    let id4 = json!([
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "0", "1"]
    ]);
    let mut h = json!([
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"]
    ]);
    h[1][3] = json!("5");
    let path = write_file(
        &dir,
        "asym.json",
        &json!({ "mode": "rational", "g0": id4, "h": h }),
    );
    let output = tracekit(&["det-ratio", "--input", &path]);
    assert_eq!(output.status.code(), Some(3));
    let message = stderr_record(&output)["error"]["message"]
        .as_str()
        .unwrap()
        .to_string();
    assert!(
        message.contains("(mu, nu) = (1, 3)"),
        "message was: {message}"
    );
}

#[test]
fn degenerate_background_is_a_contract_error() {
    let dir = TempDir::new().unwrap();
    let zero4 = json!([
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"]
    ]);
    let path = write_file(
        &dir,
        "degenerate.json",
        &json!({ "mode": "rational", "g0": zero4, "h": zero4 }),
    );
    let output = tracekit(&["metric-inverse", "--input", &path]);
    assert_eq!(output.status.code(), Some(4));
    assert_eq!(
        stderr_record(&output)["error"]["code"],
        "degenerate-background"
    );
}

#[test]
fn degenerate_total_metric_is_reported() {
    let dir = TempDir::new().unwrap();
    let id4 = json!([
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "0", "1"]
    ]);
    let minus_id4 = json!([
        ["-1", "0", "0", "0"],
        ["0", "-1", "0", "0"],
        ["0", "0", "-1", "0"],
        ["0", "0", "0", "-1"]
    ]);
    let path = write_file(
        &dir,
        "cancel.json",
        &json!({ "mode": "rational", "g0": id4, "h": minus_id4 }),
    );
    let output = tracekit(&["metric-inverse", "--input", &path]);
    assert_eq!(output.status.code(), Some(4));
    assert_eq!(
        stderr_record(&output)["error"]["code"],
        "degenerate-total-metric"
    );
}

#[test]
fn unknown_verb_rejected_before_any_file_io() {
    let output = tracekit(&["eigensplat", "--input", "/definitely/not/a/file.mat"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(output.stdout.is_empty());
    let record = stderr_record(&output);
    assert_eq!(record["error"]["kind"], "usage");
    assert!(record["error"]["message"]
        .as_str()
        .unwrap()
        .contains("eigensplat"));
}

#[test]
fn help_exits_zero() {
    let output = tracekit(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("charpoly"));
    assert!(text.contains("neumann-compare"));
}

#[test]
fn tolerance_in_rational_mode_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let path = rational_matrix_file(&dir, "m.mat", 2, &["2", "0", "0", "4"]);
    let output = tracekit(&["invert", "--input", &path, "--tolerance", "1e-9"]);
    assert_eq!(output.status.code(), Some(2));
    assert_eq!(stderr_record(&output)["error"]["kind"], "usage");
}

#[test]
fn tolerance_in_float_mode_is_accepted() {
    let dir = TempDir::new().unwrap();
    let path = write_file(
        &dir,
        "float.mat",
        &json!({ "n": 2, "mode": "real", "entries": [[2.0, 0.0], [0.0, 4.0]] }),
    );
    let doc = stdout_json(&tracekit(&[
        "invert",
        "--input",
        &path,
        "--tolerance",
        "1e-9",
    ]));
    assert_eq!(doc["entries"], json!([[0.5, 0.0], [0.0, 0.25]]));
}

#[test]
fn complex_mode_round_trip() {
    let dir = TempDir::new().unwrap();
    let path = write_file(
        &dir,
        "complex.mat",
        &json!({ "n": 2, "mode": "complex",
                 "entries": [[[0.0, 1.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, -1.0]]] }),
    );
    // diag(i, -i): determinant is 1, charpoly z^2 + 1.
    let doc = stdout_json(&tracekit(&["det", "--input", &path]));
    assert_eq!(doc["determinant"], json!([1.0, 0.0]));
    let doc = stdout_json(&tracekit(&["charpoly", "--input", &path]));
    assert_eq!(doc["coefficients"], json!([[0.0, 0.0], [1.0, 0.0]]));
}

#[test]
fn invert_round_trips_bit_exactly() {
    let dir = TempDir::new().unwrap();
    let path = rational_matrix_file(
        &dir,
        "a.mat",
        3,
        &["2", "1", "0", "1", "3", "-1", "0", "-2", "5"],
    );
    let original: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();

    let inverted = stdout_json(&tracekit(&["invert", "--input", &path]));
    let inverted_path = dir.path().join("a_inv.mat");
    std::fs::write(&inverted_path, inverted.to_string()).unwrap();

    let doubled = stdout_json(&tracekit(&[
        "invert",
        "--input",
        inverted_path.to_str().unwrap(),
    ]));
    assert_eq!(doubled["entries"], original["entries"]);
}

#[test]
fn every_verb_output_is_reparseable_json() {
    let dir = TempDir::new().unwrap();
    let matrix = rational_matrix_file(&dir, "m.mat", 2, &["2", "1", "0", "3"]);
    let id4 = json!([
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "0", "1"]
    ]);
    let half = json!([
        ["1/2", "0", "0", "0"],
        ["0", "1/2", "0", "0"],
        ["0", "0", "1/2", "0"],
        ["0", "0", "0", "1/2"]
    ]);
    let metric = write_file(
        &dir,
        "g.json",
        &json!({ "mode": "rational", "g0": id4, "h": half }),
    );

    let invocations: Vec<Vec<&str>> = vec![
        vec!["charpoly", "--input", &matrix],
        vec!["det", "--input", &matrix],
        vec!["traces", "--input", &matrix, "--m", "5"],
        vec!["ch-residual", "--input", &matrix],
        vec!["resolvent", "--input", &matrix, "--z", "7", "--verify"],
        vec!["invert", "--input", &matrix],
        vec!["gen-formula", "--k", "6"],
        vec!["metric-inverse", "--input", &metric],
        vec!["det-ratio", "--input", &metric],
        vec!["neumann-compare", "--input", &metric, "--max-order", "6"],
    ];
    for args in invocations {
        let doc = stdout_json(&tracekit(&args));
        assert!(doc.is_object(), "verb {} must emit an object", args[0]);
        assert!(doc["verb"].is_string());
        assert!(doc["mode"].is_string());
        // The table renderer must accept the same document.
        let mut table_args = args.clone();
        table_args.push("--table");
        let table = tracekit(&table_args);
        assert!(table.status.success());
        assert!(!table.stdout.is_empty());
    }
}

#[test]
fn matrix_outputs_can_feed_matrix_verbs() {
    let dir = TempDir::new().unwrap();
    let matrix = rational_matrix_file(&dir, "m.mat", 2, &["2", "1", "0", "3"]);
    let metric_doc = stdout_json(&tracekit(&["invert", "--input", &matrix]));
    let path = dir.path().join("fed.mat");
    std::fs::write(&path, metric_doc.to_string()).unwrap();
    let doc = stdout_json(&tracekit(&["det", "--input", path.to_str().unwrap()]));
    // det(A) = 6, so det(A^{-1}) = 1/6.
    assert_eq!(doc["determinant"], "1/6");
}

#[test]
fn output_flag_writes_the_document() {
    let dir = TempDir::new().unwrap();
    let matrix = rational_matrix_file(&dir, "m.mat", 2, &["1", "0", "0", "1"]);
    let out_path = dir.path().join("result.json");
    let output = tracekit(&[
        "det",
        "--input",
        &matrix,
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    assert!(output.stdout.is_empty());
    let doc: Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).expect("valid JSON");
    assert_eq!(doc["determinant"], "1");
}

#[test]
fn neumann_report_matches_geometric_remainder() {
    let dir = TempDir::new().unwrap();
    let id4 = json!([
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "0", "1"]
    ]);
    let half = json!([
        ["1/2", "0", "0", "0"],
        ["0", "1/2", "0", "0"],
        ["0", "0", "1/2", "0"],
        ["0", "0", "0", "1/2"]
    ]);
    let metric = write_file(
        &dir,
        "g.json",
        &json!({ "mode": "rational", "g0": id4, "h": half }),
    );
    let doc = stdout_json(&tracekit(&[
        "neumann-compare",
        "--input",
        &metric,
        "--max-order",
        "3",
    ]));
    let errors: Vec<&str> = doc["report"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["error"].as_str().unwrap())
        .collect();
    assert_eq!(errors, vec!["1/3", "1/6", "1/12", "1/24"]);
}

#[test]
fn readme_documents_every_contract_code() {
    let readme = include_str!("../../../README.md");
    for code in tracekit_cli::error::CONTRACT_CODES {
        assert!(
            readme.contains(&format!("`{code}`")),
            "README is missing contract code {code}"
        );
    }
}

#[test]
fn fixture_files_are_where_the_readme_says() {
    // The README walks through these example files.
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    assert!(root.join("examples-data/identity3.mat.json").exists());
    assert!(root
        .join("examples-data/minkowski-wave.metric.json")
        .exists());
}
