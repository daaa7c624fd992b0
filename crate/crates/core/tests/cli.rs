//! The `eqtwist` binary: outputs and exit codes.

mod common;

use std::process::{Command, Output};

use serde_json::{json, Value};

use common::fixture_path as fx;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqtwist")).args(args).output().unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn bredon_sphere() {
    let o = run(&[
        "bredon",
        "--complex",
        &fx("sphere2.json"),
        "--coeffs",
        &fx("const_z.json"),
        "--degree",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o), json!({ "degree": 2, "rank": 1, "torsion": [] }));
}

#[test]
fn bredon_rejects_a_twist() {
    let o = run(&[
        "bredon",
        "--complex",
        &fx("circle.json"),
        "--coeffs",
        &fx("const_z.json"),
        "--twist",
        &fx("circle_tau.json"),
        "--degree",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reflected_circle_fixed_points() {
    let o = run(&[
        "fixedpoints",
        "--complex",
        &fx("refcircle.json"),
        "--group",
        &fx("z2.json"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["fixed_points"][1]["counts"], json!([2, 0, 0, 0]));
    assert_eq!(v["g_connected"], json!(false));
}

#[test]
fn validation_failures_exit_one() {
    let o = run(&["validate", "--complex", &fx("broken_face.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_of(&o)["ok"], json!(false));

    let o = run(&[
        "validate",
        "--complex",
        &fx("refcircle.json"),
        "--group",
        &fx("z2.json"),
        "--coeffs",
        &fx("const_z.json"),
        "--twist",
        &fx("refcircle_bad_tau.json"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let reports = json_of(&o)["reports"].clone();
    let rules: Vec<&str> = reports
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| {
            r["violations"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v["rule"].as_str().unwrap())
        })
        .collect();
    assert!(rules.contains(&"naturality"), "{rules:?}");
}

#[test]
fn cartan_check_reports_the_failing_axiom() {
    let o = run(&[
        "cartan-check",
        "--theory",
        &fx("theory_trivial_psi.json"),
        "--bounds",
        "2,3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let failing: Vec<u64> = json_of(&o)["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["pass"] == json!(false))
        .map(|a| a["axiom"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, vec![5]);

    let o = run(&["cartan-check", "--theory", &fx("theory_z2.json")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn crosscheck_matches() {
    let o = run(&[
        "crosscheck",
        "--complex",
        &fx("circle.json"),
        "--coeffs",
        &fx("const_z4.json"),
        "--twist",
        &fx("circle_tau.json"),
        "--action",
        &fx("negate_z4.json"),
        "--nmax",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["status"], json!("match"));
    assert_eq!(v["rows"][1]["bredon"], json!({ "rank": 0, "torsion": [2] }));
}

#[test]
fn em_info_counts_and_budget() {
    let o = run(&["em-info", "--A", "Z2", "--n", "1", "--q", "3"]);
    assert_eq!(json_of(&o)["cardinalities"], json!([1, 2, 4, 8]));
    let o = run(&["em-info", "--A", "Z4", "--n", "1", "--q", "4", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_files_and_bad_arguments_exit_one() {
    assert_eq!(
        run(&["twisted", "--complex", "missing.json", "--degree", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["twisted", "--degree", "0"]).status.code(), Some(1));
    assert_eq!(
        run(&["cartan-check", "--theory", &fx("theory_z2.json"), "--bounds", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn text_format() {
    let o = run(&[
        "twisted",
        "--complex",
        &fx("circle.json"),
        "--coeffs",
        &fx("const_z2.json"),
        "--degree",
        "1",
        "--format",
        "text",
    ]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "H^1 = Z/2\n");
}
