use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gmconn_cli::files::{arrangement_to_file, path_to_file, ArrangementFile};
use gmconn_cli::{parse_arrangement_file, parse_path_file};
use gmconn_core::{compute_type, golden, IndexSet, Rational, Weights};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn gmconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmconn")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gmconn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const ARRANGEMENTS: [&str; 3] = ["four_lines.json", "selberg.json", "four_lines_weighted.json"];
const PATHS: [&str; 4] =
    ["four_lines_t1.json", "four_lines_t2.json", "four_lines_t3.json", "selberg_path.json"];

#[test]
fn connection_t2_json() {
    let f = fixture("four_lines_t2.json");
    let out = gmconn(&["--format", "json", "connection", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["omega"]["entries"], serde_json::json!([["l1 + l2", "l2"], ["0", "0"]]));
    assert_eq!(v["omega"]["rows"], serde_json::json!(["24", "34"]));
    assert_eq!(v["multiplicities"], serde_json::json!({"124": 1, "125": 1}));
    assert!(v["note"].as_str().unwrap().contains("cover relation"));
}

#[test]
fn verify_paper_passes() {
    let out = gmconn(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(text.contains("Omega_S(S')"));
}

#[test]
fn omega_general_345() {
    let out = gmconn(&["--format", "json", "omega-general", "--n", "4", "--ell", "2", "--J", "3,4,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json_of(&out)["omega"]["entries"],
        serde_json::json!([["0", "0", "-l2"], ["0", "0", "l2"], ["0", "0", "-l1 - l2"]])
    );
}

#[test]
fn projection_of_general_position_is_identity() {
    let f = tmp("general.json", r#"{"n": 4, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["-1","1","1"],["-3","1","2"]], "weights": "generic"}"#);
    let out = gmconn(&["--format", "json", "projection", f.to_str().unwrap()]);
    let v = json_of(&out);
    assert_eq!(v["dep"], serde_json::json!([]));
    assert_eq!(v["projection"]["rows"], v["projection"]["cols"]);
    assert_eq!(
        v["projection"]["entries"],
        serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    );
}

#[test]
fn projection_entry_rendering() {
    let f = fixture("four_lines.json");
    let out = gmconn(&["--format", "json", "projection", f.to_str().unwrap()]);
    assert_eq!(json_of(&out)["projection"]["entries"][0][0], "(-l3)/(l1 + l2 + l3)");
    let text = String::from_utf8(gmconn(&["projection", f.to_str().unwrap()]).stdout).unwrap();
    assert!(text.lines().nth(2).unwrap().contains("eta_24"));
}

#[test]
fn analyze_matches_brute_force_minors() {
    // 3x3 determinants of the fixture rows with (1, 0, 0) appended
    let rows: [[i64; 3]; 5] = [[0, 1, 0], [0, 0, 1], [0, 1, 1], [-1, 1, 2], [1, 0, 0]];
    let det = |a: [i64; 3], b: [i64; 3], c: [i64; 3]| {
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
    };
    let mut dep = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                if det(rows[i], rows[j], rows[k]) == 0 {
                    dep.push(format!("{}{}{}", i + 1, j + 1, k + 1));
                }
            }
        }
    }
    assert_eq!(dep, ["123"]);
    let f = fixture("four_lines.json");
    let v = json_of(&gmconn(&["--format", "json", "analyze", f.to_str().unwrap()]));
    assert_eq!(v["dep"], serde_json::json!(dep));
    assert_eq!(v["betanbc"], serde_json::json!(["24", "34"]));
    assert_eq!(v["betti"], serde_json::json!([1, 4, 5]));
    assert_eq!(v["euler_abs"], 2);
}

#[test]
fn check_weights_reports_violations() {
    let f = tmp("resonant.json", r#"{"n": 4, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["0","1","1"],["-1","1","2"]], "weights": ["1","1","1","1/2"]}"#);
    let v = json_of(&gmconn(&["--format", "json", "check-weights", f.to_str().unwrap()]));
    assert_eq!(v["nonresonant"], false);
    assert!(v["violations"].as_array().unwrap().iter().any(|x| x["flat"] == "123" && x["value"] == "3"));
    let out = gmconn(&["--format", "json", "projection", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].as_str().unwrap().contains("resonant"));
    let out = gmconn(&["--weights", "generic", "projection", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn concrete_connection() {
    let f = tmp(
        "t2_weighted.json",
        &std::fs::read_to_string(fixture("four_lines_t2.json"))
            .unwrap()
            .replace(r#""weights": "generic""#, r#""weights": ["1/3", "2/5", "-7/2", "5/11"]"#),
    );
    let v = json_of(&gmconn(&["--format", "json", "connection", f.to_str().unwrap()]));
    assert_eq!(v["omega"]["entries"], serde_json::json!([["11/15", "2/5"], ["0", "0"]]));
}

#[test]
fn errors_are_wrapped_in_json() {
    let f = tmp("zero_row.json", r#"{"n": 3, "ell": 2, "rows": [["0","0","0"],["0","0","1"],["1","1","1"]], "weights": "generic"}"#);
    let out = gmconn(&["--format", "json", "analyze", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].as_str().unwrap().contains("row 1 is zero"));
    let out = gmconn(&["analyze", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
}

#[test]
fn declared_type_mismatch_exits_one() {
    let f = tmp(
        "t2_wrong.json",
        &std::fs::read_to_string(fixture("four_lines_t2.json")).unwrap().replace(r#", "125"]"#, "]"),
    );
    let out = gmconn(&["--format", "json", "multiplicity", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json_of(&out)["error"].as_str().unwrap().contains("declared type"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(gmconn(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(gmconn(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_identical_across_runs_and_jobs() {
    let f = fixture("selberg_path.json");
    let f = f.to_str().unwrap();
    for fmt in ["text", "json"] {
        let a = gmconn(&["--format", fmt, "--jobs", "1", "connection", f]).stdout;
        let b = gmconn(&["--format", fmt, "--jobs", "4", "connection", f]).stdout;
        let c = gmconn(&["--format", fmt, "connection", f]).stdout;
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}

#[test]
fn rejects_malformed_input() {
    let cases = [
        (r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","0","1"]], "weights": "generic"}"#, "expected 3 rows"),
        (r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["1","1"]], "weights": "generic"}"#, "row 3 has 2"),
        (r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["1","x","1"]], "weights": "generic"}"#, "malformed rational"),
        (r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","2","0"],["1","1","1"]], "weights": "generic"}"#, "same hyperplane"),
        (r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["1","1","1"]], "weights": ["1"]}"#, "length 1"),
        (r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["1","1","1"]], "weights": "symbolic"}"#, "unknown weights"),
        (r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["1","1","1"]], "weights": "generic", "t_witness": "1"}"#, "t_witness"),
    ];
    for (body, msg) in cases {
        let err = parse_arrangement_file(body.as_bytes()).unwrap_err().to_string();
        assert!(err.contains(msg), "{err} lacks {msg}");
    }
    let no_witness = r#"{"n": 3, "ell": 2, "rows": [["0","1","0"],["0","0","1"],["1","t","1"]], "weights": "generic"}"#;
    assert!(parse_path_file(no_witness.as_bytes()).is_err());
}

#[test]
fn generic_weights_mode() {
    let (_, w) = parse_arrangement_file(&std::fs::read(fixture("four_lines.json")).unwrap()).unwrap();
    assert_eq!(w, Weights::Generic);
    let (_, w) = parse_arrangement_file(&std::fs::read(fixture("four_lines_weighted.json")).unwrap()).unwrap();
    assert_eq!(w, Weights::Values(["1/3", "2/5", "-7/2", "5/11"].iter().map(|s| s.parse::<Rational>().unwrap()).collect()));
}

#[test]
fn fixtures_round_trip() {
    for name in ARRANGEMENTS {
        let bytes = std::fs::read(fixture(name)).unwrap();
        let (r, w) = parse_arrangement_file(&bytes).unwrap();
        let again = serde_json::to_vec(&arrangement_to_file(&r, &w)).unwrap();
        assert_eq!(parse_arrangement_file(&again).unwrap(), (r, w), "{name}");
        assert_eq!(ArrangementFile::from_bytes(&bytes).unwrap(), ArrangementFile::from_bytes(&again).unwrap());
    }
    for name in PATHS {
        let bytes = std::fs::read(fixture(name)).unwrap();
        let (p, w) = parse_path_file(&bytes).unwrap();
        let again = serde_json::to_vec(&path_to_file(&p, &w)).unwrap();
        assert_eq!(parse_path_file(&again).unwrap(), (p, w), "{name}");
    }
}

#[test]
fn fixtures_agree_with_builtin_examples() {
    let read = |n: &str| std::fs::read(fixture(n)).unwrap();
    assert_eq!(parse_arrangement_file(&read("four_lines.json")).unwrap().0, golden::example_t());
    assert_eq!(parse_arrangement_file(&read("selberg.json")).unwrap().0, golden::selberg());
    for ((_, p), name) in golden::example_t_paths().into_iter().zip(&PATHS[..3]) {
        assert_eq!(parse_path_file(&read(name)).unwrap().0.path, p.path);
    }
    assert_eq!(parse_path_file(&read("selberg_path.json")).unwrap().0.path, golden::selberg_path().path);
    let dep = compute_type(&golden::selberg()).dep_list();
    assert!(dep.contains(&"126".parse::<IndexSet>().unwrap()));
}
