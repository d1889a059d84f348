//! End-to-end tests of the `krull` binary: exit codes, document shape,
//! and byte determinism, all through the real process boundary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn krull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krull"))
        .args(args)
        .output()
        .expect("the krull binary runs")
}

/// A scratch file that cleans itself up; unique per test name and process.
struct Scratch(PathBuf);

impl Scratch {
    fn with_content(name: &str, content: &str) -> Scratch {
        let mut path = std::env::temp_dir();
        path.push(format!("krull-cli-{}-{name}", std::process::id()));
        std::fs::write(&path, content).expect("temp files are writable");
        Scratch(path)
    }

    fn empty(name: &str) -> Scratch {
        Self::with_content(name, "")
    }

    fn as_str(&self) -> &str {
        self.0.to_str().expect("temp paths are valid UTF-8")
    }

    fn read(&self) -> String {
        std::fs::read_to_string(&self.0).expect("the scratch file exists")
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON document")
}

#[test]
fn analyze_quadrant_reports_the_full_ladder() {
    let input = Scratch::with_content(
        "quadrant.json",
        r#"{"ambient_dim": 2, "generators": [[1, 0], [0, 1]]}"#,
    );
    let out = krull(&["analyze", "--input", input.as_str()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["normal"], Value::Bool(true));
    assert_eq!(doc["properties"]["krull"]["verdict"], "holds");
    assert_eq!(doc["properties"]["weakly_krull"]["verdict"], "holds");
    assert_eq!(doc["properties"]["gcd"]["verdict"], "holds");
    assert_eq!(
        doc["algebra_weakly_krull"]["verdict"],
        doc["properties"]["weakly_krull"]["verdict"]
    );
    assert_eq!(doc["class_group"], Value::Array(vec![]));
    assert_eq!(doc["timing_ms"], Value::Null);
    let rows = doc["spectrum"].as_array().unwrap();
    let kinds = |k: &str| rows.iter().filter(|r| r["kind"] == k).count();
    assert_eq!(kinds("monomial"), 3);
    assert_eq!(kinds("contraction"), 1);
}

#[test]
fn analyze_numerical_semigroup_separates_the_properties() {
    let input = Scratch::with_content(
        "nsg.json",
        r#"{"ambient_dim": 1, "generators": [[2], [3]]}"#,
    );
    let out = krull(&["analyze", "--input", input.as_str()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["normal"], Value::Bool(false));
    assert_eq!(doc["properties"]["weakly_krull"]["verdict"], "holds");
    assert_eq!(doc["properties"]["weakly_factorial"]["verdict"], "holds");
    assert_eq!(doc["properties"]["gcd"]["verdict"], "fails");
    assert_eq!(doc["class_group"], Value::Null);
    assert_eq!(doc["oracle_cross_check"]["consistent"], Value::Bool(true));
}

#[test]
fn analyze_output_is_byte_identical_across_runs() {
    let input = Scratch::with_content(
        "det.json",
        r#"{"ambient_dim": 2, "generators": [[2, 0], [1, 1], [0, 2]]}"#,
    );
    let first = krull(&["analyze", "--input", input.as_str()]);
    let second = krull(&["analyze", "--input", input.as_str()]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn analyze_text_format_renders_the_report() {
    let input = Scratch::with_content(
        "text.json",
        r#"{"ambient_dim": 1, "generators": [[2], [3]]}"#,
    );
    let out = krull(&["analyze", "--input", input.as_str(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("normal: false"));
    assert!(text.contains("weakly_krull: holds"));
    assert!(text.contains("oracle_cross_check:"));
}

#[test]
fn analyze_writes_to_the_out_path_instead_of_stdout() {
    let input = Scratch::with_content(
        "outflag.json",
        r#"{"ambient_dim": 1, "generators": [[2], [3]]}"#,
    );
    let target = Scratch::empty("outflag-report.json");
    let out = krull(&[
        "analyze",
        "--input",
        input.as_str(),
        "--out",
        target.as_str(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&target.read()).unwrap();
    assert_eq!(doc["properties"]["weakly_krull"]["verdict"], "holds");
}

#[test]
fn malformed_input_is_a_parse_error() {
    let input = Scratch::with_content("broken.json", "{not json");
    let out = krull(&["analyze", "--input", input.as_str()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_input_file_is_a_parse_error() {
    let out = krull(&["analyze", "--input", "/nonexistent/monoid.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_input_fields_are_rejected() {
    let input = Scratch::with_content(
        "extra.json",
        r#"{"ambient_dim": 1, "generators": [[2]], "extra": 1}"#,
    );
    let out = krull(&["analyze", "--input", input.as_str()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_ambient_dimension_has_its_own_exit_code() {
    let input = Scratch::with_content(
        "dim5.json",
        r#"{"ambient_dim": 5, "generators": [[1, 0, 0, 0, 0]]}"#,
    );
    let out = krull(&["analyze", "--input", input.as_str()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exhausted_degree_bound_has_its_own_exit_code() {
    // classifying the height-two prime of this monoid needs dual
    // generators of positive degree, which a bound of one cuts off; the
    // same input with the default bound analyzes cleanly
    let input = Scratch::with_content(
        "tight.json",
        r#"{"ambient_dim": 2, "generators": [[2, 0], [3, 0], [0, 2], [0, 3], [1, 1]]}"#,
    );
    let tight = krull(&[
        "analyze",
        "--input",
        input.as_str(),
        "--degree-bound",
        "1",
    ]);
    assert_eq!(tight.status.code(), Some(4));
    assert!(tight.stdout.is_empty());
    let free = krull(&["analyze", "--input", input.as_str()]);
    assert_eq!(free.status.code(), Some(0));
}

#[test]
fn counterexample_suite_passes_at_shallow_and_deep_depths() {
    for depth in ["1", "4"] {
        let out = krull(&["counterexample", "--depth", depth]);
        assert_eq!(out.status.code(), Some(0), "depth {depth}");
        let doc = stdout_json(&out);
        assert_eq!(doc["passed"], Value::Bool(true));
        for item in doc["items"].as_array().unwrap() {
            assert_eq!(item["passed"], Value::Bool(true));
        }
    }
}

#[test]
fn counterexample_depth_is_range_checked() {
    let out = krull(&["counterexample", "--depth", "17"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_runs_are_deterministic_for_a_fixed_seed() {
    let first = krull(&["corpus", "--seed", "9", "--count", "4"]);
    let second = krull(&["corpus", "--seed", "9", "--count", "4"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let doc = stdout_json(&first);
    assert_eq!(doc["seed"], 9);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 4);
    assert_eq!(doc["contradictions"], Value::Array(vec![]));
}

#[test]
fn empty_corpus_is_a_successful_run() {
    let out = krull(&["corpus", "--seed", "1", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["entries"], Value::Array(vec![]));
}
