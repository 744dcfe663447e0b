use std::process::{Command, Output};

use serde_json::Value;

fn graphreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphreg")).args(args).env("RUST_LOG", "warn").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn clebsch_six_vertex_condition() {
    let out = graphreg(&["check-tvc", "--catalog", "clebsch", "--t", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["holds"], true);
}

#[test]
fn gq24_is_3_7_regular() {
    let out = graphreg(&["check-mn-regular", "--catalog", "gq24", "--m", "3", "--n", "7", "--mode", "reduced"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["holds"], true);
    assert!(report["levels"].as_array().unwrap().len() >= 5);
}

#[test]
fn k4e_free_irreducible_types_of_order_3_7() {
    let out = graphreg(&["enumerate-types", "--m", "3", "--n", "7", "--theta-k4e-free", "--irreducible"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["summary"]["count"], 1);
    assert_eq!(report["types"][0], "F~~~w 4,5,6");

    let text = graphreg(&["enumerate-types", "--m", "3", "--n", "7", "--theta-k4e-free", "--irreducible", "--format", "text"]);
    let stdout = String::from_utf8(text.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "F~~~w 4,5,6");
    let summary: Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(summary["count"], 1);
}

#[test]
fn failing_check_reports_a_witness() {
    let out = graphreg(&["check-isoregular", "--catalog", "petersen", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let w = &json(&out)["witness"];
    assert_eq!(w["kappa1"].as_array().unwrap().len(), 3);
}

#[test]
fn single_type_check() {
    // triangle over an edge, in the Petersen graph: never completes
    let out = graphreg(&["check-type", "--catalog", "petersen", "--type", "Bw 0,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["constant"], 0);
}

#[test]
fn usage_and_data_errors_exit_2() {
    for args in [
        vec!["no-such-command"],
        vec!["check-tvc", "--t", "3"],
        vec!["check-tvc", "--catalog", "c5", "--g6", "Dhc", "--t", "3"],
        vec!["check-tvc", "--g6", "!!!", "--t", "3"],
        vec!["check-tvc", "--catalog", "nonesuch", "--t", "3"],
        vec!["check-mn-regular", "--catalog", "c5", "--m", "2", "--n", "4", "--mode", "fast"],
        vec!["enumerate-types", "--m", "3", "--n", "12"],
        vec!["construct", "--q", "5"],
        vec!["check-tvc", "--catalog", "c5", "--t", "0"],
    ] {
        let out = graphreg(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["check-mn-regular", "--catalog", "petersen", "--m", "3", "--n", "5"],
        vec!["enumerate-types", "--m", "2", "--n", "5", "--irreducible"],
        vec!["analyze-geometry", "--q", "2"],
        vec!["triads", "--catalog", "petersen"],
    ] {
        let a = graphreg(&args);
        let b = graphreg(&[args.as_slice(), &["--threads", "1"]].concat());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn geometry_commands() {
    let out = graphreg(&["analyze-geometry", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["graph"]["srg"]["k"], 10);
    assert_eq!(r["incidence_axioms"]["gq"], true);
    assert_eq!(r["cameron"]["c"], "3");

    let out = graphreg(&["triads", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["histogram"]["3"], 720);

    let out = graphreg(&["triads", "--catalog", "petersen"]);
    assert_eq!(out.status.code(), Some(1));

    let out = graphreg(&["construct", "--q", "2"]);
    let r = json(&out);
    assert_eq!(r["points"], 27);
    assert_eq!(r["lines"].as_array().unwrap().len(), 45);
}

#[test]
fn reads_edge_list_files() {
    let path = std::env::temp_dir().join(format!("graphreg-c5-{}.txt", std::process::id()));
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = graphreg(&["check-tvc", "--file", path.to_str().unwrap(), "--t", "3"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn selftest_passes() {
    let out = graphreg(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let suites = json(&out)["suites"].as_array().unwrap().clone();
    assert!(suites.iter().all(|s| s["violations"] == 0 && s["cases"].as_u64().unwrap() > 0));
}
