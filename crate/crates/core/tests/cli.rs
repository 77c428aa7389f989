//! CLI contract tests: exit codes, output schemas, determinism.

use std::process::{Command, Output};

fn quotlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quotlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tangent_example_point() {
    let out = quotlab(&["tangent", "--vars", "3", "--gens", "x1,x2,x3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["parity_ok"], true);
}

#[test]
fn spectrum_json_schema_and_determinism() {
    let run = || {
        let out = quotlab(&["spectrum", "--vars", "3", "--points", "6", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        // elapsed is the only non-deterministic field
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = run();
    let b = run();
    assert_eq!(a, b, "identical configuration must give identical bodies");
    assert_eq!(a["params"]["vars"], 3);
    assert_eq!(a["total"], 48);
    assert!(a["values"].as_array().unwrap().iter().all(|e| e["dim"].is_u64() && e["multiplicity"].is_u64()));
}

#[test]
fn spectrum_csv_roundtrips_through_header() {
    let out = quotlab(&["spectrum", "--vars", "2", "--points", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("dim,multiplicity"));
    let rows: Vec<(u64, u64)> = lines
        .map(|l| {
            let (d, m) = l.split_once(',').unwrap();
            (d.parse().unwrap(), m.parse().unwrap())
        })
        .collect();
    // all monomial points on the smooth surface have dimension 2d = 10
    assert_eq!(rows, vec![(10, 7)]);
}

#[test]
fn enumerate_count_only_matches_oracle() {
    let out = quotlab(&["enumerate", "--vars", "3", "--points", "10", "--count-only"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "500");
    let out = quotlab(&["count", "--vars", "3", "--points", "10"]);
    assert_eq!(stdout(&out).trim(), "500");
}

#[test]
fn enumerate_json_emits_staircases() {
    let out = quotlab(&["enumerate", "--vars", "2", "--points", "2", "--rank", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["records"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_parity_passes_and_mutation_fails() {
    let out = quotlab(&[
        "verify", "parity", "--vars", "3", "--points", "6", "--trials", "25", "--seed", "7",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["failures"], 0);
    // flipping an internal result must be caught and turn into exit 1
    let out = quotlab(&[
        "verify", "parity", "--vars", "3", "--points", "6", "--trials", "25", "--seed", "7",
        "--inject-parity-bug", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], false);
}

#[test]
fn verify_parity_records_but_does_not_assert_outside_three_vars() {
    // n = 4 contains both parities; still exit 0 because the theorem is
    // three-dimensional
    let out = quotlab(&[
        "verify", "parity", "--vars", "4", "--points", "6", "--trials", "0", "--seed", "1",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["params"]["parity_mismatches"].as_u64().unwrap() > 0);
    assert_eq!(v["ok"], true);
}

#[test]
fn verify_other_targets_pass() {
    for target in ["duality", "cancellation", "homij", "semicontinuity"] {
        let out = quotlab(&[
            "verify", target, "--vars", "3", "--points", "5", "--trials", "5", "--seed", "3",
            "--format", "json",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "verify {target} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn verify_parity_nonstandard_gradings() {
    for grading in ["weights 4 5 6", "weights 1,0,0; 0,1,1"] {
        let out = quotlab(&[
            "verify", "parity", "--vars", "3", "--points", "6", "--trials", "10", "--seed", "11",
            "--grading", grading, "--format", "json",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "grading `{grading}`: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(quotlab(&["spectrum", "--vars", "3"]).status.code(), Some(2)); // missing --points
    assert_eq!(quotlab(&["no-such-command"]).status.code(), Some(2));
    // composite characteristic
    assert_eq!(
        quotlab(&["tangent", "--vars", "2", "--gens", "x1", "--char", "32001"]).status.code(),
        Some(2)
    );
    // no count oracle beyond three variables
    assert_eq!(quotlab(&["count", "--vars", "4", "--points", "5"]).status.code(), Some(2));
    // non-homogeneous input for a graded computation
    assert_eq!(
        quotlab(&["tangent", "--vars", "2", "--gens", "x1^2 - x2"]).status.code(),
        Some(2)
    );
    // infinite colength
    assert_eq!(
        quotlab(&["tangent", "--vars", "2", "--gens", "x1"]).status.code(),
        Some(2)
    );
}

#[test]
fn ext_table_csv_has_documented_header() {
    let out = quotlab(&[
        "ext-table", "--vars", "3", "--gens", "x1,x2,x3", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("i,j,dim"));
    // Koszul self-ext: C(3, i) at degree -i
    let rows: Vec<&str> = lines.collect();
    assert!(rows.contains(&"0,0,1"));
    assert!(rows.contains(&"1,-1,3"));
    assert!(rows.contains(&"2,-2,3"));
    assert!(rows.contains(&"3,-3,1"));
}

#[test]
fn ext_table_cross_pair() {
    // Ext(S/(x,y), S/(x,y)^2) over two variables: socle dimension 2 in
    // degree 1, then 3 and 1, with vanishing Euler characteristic
    let out = quotlab(&[
        "ext-table", "--vars", "2", "--gens", "x1,x2", "--gens2", "x1^2, x1*x2, x2^2",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    let rows: Vec<&str> = body.lines().skip(1).collect();
    assert_eq!(rows, vec!["0,1,2", "1,0,3", "2,-2,1"]);
}

#[test]
fn verify_parity_rank_two() {
    let out = quotlab(&[
        "verify", "parity", "--vars", "3", "--rank", "2", "--points", "4", "--trials", "10",
        "--seed", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], true);
    assert!(v["trials"].as_u64().unwrap() > 10);
}

#[test]
fn characteristic_env_and_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_quotlab"))
        .args(["tangent", "--vars", "2", "--gens", "x1,x2", "--format", "json"])
        .env("QUOTLAB_CHAR", "101")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["params"]["characteristic"], 101);
}

#[test]
fn tangent_from_file() {
    let dir = std::env::temp_dir().join("quotlab_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ideal.txt");
    std::fs::write(&path, "vars: 2\nrank: 1\ngrading: standard\nx1^2\nx1*x2\nx2^2\n").unwrap();
    let out = quotlab(&["tangent", "--file", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 6);
}

#[test]
fn jobs_flag_does_not_change_results() {
    let run = |jobs: &str| {
        let out = quotlab(&["spectrum", "--vars", "3", "--points", "7", "--jobs", jobs, "--format", "json"]);
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(run("1"), run("4"));
}
