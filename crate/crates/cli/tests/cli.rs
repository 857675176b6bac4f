//! End-to-end tests of the `liectrl` binary: exit codes, report output,
//! JSON and DOT emission, and flag validation, all run against the real
//! executable.

use std::path::Path;
use std::process::{Command, Output};

use liectrl::analysis::parse_spec;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liectrl"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Parse the pretty-printed JSON blob that follows the human-readable text
/// on stdout; it is the first line consisting of a lone opening brace.
fn json_tail(text: &str) -> serde_json::Value {
    let start = if text.starts_with("{\n") {
        0
    } else {
        text.find("\n{\n").expect("json object in stdout") + 1
    };
    serde_json::from_str(text[start..].trim()).expect("valid json")
}

#[test]
fn analyze_controllable_spec_file_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let spec_path = dir.path().join("path.json");
    std::fs::write(
        &spec_path,
        r#"{
            "name": "five-path",
            "system": { "kind": "so_standard", "n": 5,
                        "generators": [[1,2],[2,3],[3,4],[4,5]] }
        }"#,
    )
    .unwrap();
    let out = run(&["analyze", "--spec", spec_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("verdict          CONTROLLABLE"), "{text}");
    assert!(text.contains("lie rank         10"), "{text}");
    assert!(text.contains("(1 2 3 4 5)"), "{text}");
}

#[test]
fn analyze_uncontrollable_example_exits_one() {
    let out = run(&["analyze", "--example", "so5-two-blocks"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("UNCONTROLLABLE"), "{text}");
    assert!(text.contains("{1 2 3} {4 5}"), "{text}");
}

#[test]
fn analyze_backend_mismatch_exits_three() {
    let out = run(&["analyze", "--example", "sl3c-cycle-gap"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("MISMATCH"), "{}", stdout(&out));
}

#[test]
fn analyze_invalid_spec_names_the_field_and_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let spec_path = dir.path().join("bad.json");
    std::fs::write(
        &spec_path,
        r#"{ "name": "bad",
             "system": { "kind": "so_standard", "n": 5, "generators": [[2,2]] } }"#,
    )
    .unwrap();
    let out = run(&["analyze", "--spec", spec_path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("system.generators"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn analyze_missing_file_exits_two() {
    let out = run(&["analyze", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cannot read"), "{}", stderr(&out));
}

#[test]
fn analyze_unknown_example_exits_two() {
    let out = run(&["analyze", "--example", "not-a-system"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not-a-system"), "{}", stderr(&out));
}

#[test]
fn analyze_writes_versioned_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let out = run(&[
        "analyze",
        "--example",
        "so5-path",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["name"], "so5-path");
    assert_eq!(report["lie_rank"], 10);
    assert_eq!(report["verdict"], true);
    assert_eq!(report["cross_check"]["status"], "agree");
    assert_eq!(report["witness_count"], "1");
}

#[test]
fn analyze_json_to_stdout() {
    let out = run(&["analyze", "--example", "so5-path", "--json", "-"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // the human report precedes the JSON blob; both must be present
    assert!(text.contains("verdict          CONTROLLABLE"), "{text}");
    let report = json_tail(&text);
    assert_eq!(report["schema_version"], 1);
}

fn read_single_dot(dir: &Path, stem: &str) -> String {
    std::fs::read_to_string(dir.join(format!("{stem}.dot"))).expect("dot file written")
}

#[test]
fn analyze_emits_deterministic_dot_with_closure_marks() {
    let dir = tempfile::tempdir().unwrap();
    let dot_dir = dir.path().join("dots");
    let args = [
        "analyze",
        "--example",
        "so5-path4",
        "--dot",
        dot_dir.to_str().unwrap(),
    ];
    let out = run(&args);
    assert_eq!(code(&out), 1); // uncontrollable system, DOT still written
    let first = read_single_dot(&dot_dir, "so5-path4");
    // three base edges, three closure edges (steps 1, 1, 2), isolated v5
    assert_eq!(first.matches("--").count(), 6, "{first}");
    assert_eq!(first.matches("color=red").count(), 3, "{first}");
    assert_eq!(first.matches("label=\"1\"").count(), 2, "{first}");
    assert_eq!(first.matches("label=\"2\"").count(), 1, "{first}");
    assert!(first.contains("v5;"), "{first}");
    // bit-exact on a second run
    let out = run(&args);
    assert_eq!(code(&out), 1);
    assert_eq!(read_single_dot(&dot_dir, "so5-path4"), first);
}

#[test]
fn analyze_dot_for_graphless_kind_warns_and_continues() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "analyze",
        "--example",
        "sl3c-cartan-pairs",
        "--dot",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(
        stderr(&out).contains("no generator graph"),
        "{}",
        stderr(&out)
    );
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_none());
}

#[test]
fn analyze_respects_backend_selection() {
    let out = run(&["analyze", "--example", "so5-path", "--backends", "graph"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("backends         graph=yes"), "{text}");
    assert!(!text.contains("lie rank"), "{text}");
    let out = run(&["analyze", "--example", "so5-path", "--backends", "magic"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("magic"), "{}", stderr(&out));
}

#[test]
fn analyze_caps_witness_enumeration() {
    // the complete graph on 4 vertices has 16 spanning trees
    let dir = tempfile::tempdir().unwrap();
    let spec_path = dir.path().join("k4.json");
    std::fs::write(
        &spec_path,
        r#"{ "name": "k4",
             "system": { "kind": "so_standard", "n": 4,
                         "generators": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]] } }"#,
    )
    .unwrap();
    let out = run(&[
        "analyze",
        "--spec",
        spec_path.to_str().unwrap(),
        "--max-witnesses",
        "5",
        "--json",
        "-",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("16 minimal (showing 1)"), "{text}");
    let report = json_tail(&text);
    assert_eq!(report["witness_count"], "16");
    assert_eq!(report["witnesses_truncated"], true);
}

#[test]
fn sweep_standard_exits_clean_and_emits_json() {
    let out = run(&["sweep", "--sweep-n", "3", "--json", "-"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("swept 8 subsets"), "{text}");
    let sweep = json_tail(&text);
    assert_eq!(sweep["rows"].as_array().unwrap().len(), 8);
    assert_eq!(sweep["controllable_count"], 4);
    assert_eq!(sweep["backend_disagreements"].as_array().unwrap().len(), 0);
}

#[test]
fn sweep_requires_its_size_arguments() {
    let out = run(&["sweep"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--sweep-n"), "{}", stderr(&out));
    let out = run(&["sweep", "--kind", "formation"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--agents"), "{}", stderr(&out));
}

#[test]
fn sweep_refuses_oversized_inputs_without_override() {
    let out = run(&["sweep", "--sweep-n", "7"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("2^21"), "{}", stderr(&out));
    let out = run(&["sweep", "--kind", "formation", "--agents", "6"]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("--allow-large") || stderr(&out).contains("2^15"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn sl3_sweep_reports_the_gap_without_failing() {
    let out = run(&["sweep", "--kind", "sl3c"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("28 counterexamples to sufficiency"), "{text}");
    assert!(
        text.contains("{X3, Y3} passes the cycle criterion but has rank 3 < 8"),
        "{text}"
    );
}

#[test]
fn formation_sweep_exits_clean() {
    let out = run(&["sweep", "--kind", "formation", "--agents", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("swept 64 coupling subsets"), "{text}");
    assert!(
        text.contains("connectivity matches rank equality on every subset"),
        "{text}"
    );
}

#[test]
fn thread_override_is_honored_and_validated() {
    let out = bin()
        .args(["sweep", "--sweep-n", "3"])
        .env("LIECTRL_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let out = bin()
        .args(["sweep", "--sweep-n", "3"])
        .env("LIECTRL_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("LIECTRL_THREADS"), "{}", stderr(&out));
}

#[test]
fn verify_relations_holds_on_defaults_and_small_formations() {
    let out = run(&["verify-relations", "--json", "-"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("holds exactly"), "{text}");
    let payload = json_tail(&text);
    assert_eq!(payload["split_table_holds"], true);
    assert_eq!(payload["formation_relations"]["checked"], 480);
    assert_eq!(payload["formation_grading"]["graded"], true);
    // with 4 agents the five-index identity is vacuous but nothing fails
    let out = run(&["verify-relations", "--agents", "4"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("need more agents"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn examples_dump_produces_parseable_specs() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["examples", "--dump", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let mut count = 0;
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let spec = parse_spec(&text).expect("dumped spec parses");
        assert!(!spec.name.is_empty());
        count += 1;
    }
    assert_eq!(count, 12);
}

#[test]
fn shipped_sample_specs_analyze_as_documented() {
    let testdata = Path::new(env!("CARGO_MANIFEST_DIR")).join("testdata");

    // connected ring on so(4): controllable, four spanning trees
    let out = run(&[
        "analyze",
        "--spec",
        testdata.join("so4-ring.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("lie rank         6"), "{text}");
    assert!(text.contains("witnesses        4 minimal"), "{text}");

    // rank-deficient raw pair with an explicit full dimension: exit 1
    let out = run(&[
        "analyze",
        "--spec",
        testdata.join("raw-shear.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("lie rank         2"), "{text}");
    assert!(text.contains("full dimension   3"), "{text}");

    // star-coupled formation: connected, hence controllable
    let out = run(&[
        "analyze",
        "--spec",
        testdata.join("formation-star.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn examples_run_passes_with_the_documented_gap() {
    let out = run(&["examples", "--run"]);
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("sl3c-cycle-gap     MISMATCH"), "{text}");
    assert!(text.contains("so5-path           controllable"), "{text}");
}
