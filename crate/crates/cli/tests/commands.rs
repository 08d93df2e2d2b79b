use std::process::{Command, Output};

use serde_json::Value;

fn linchord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linchord"))
        .args(args)
        .env_remove("LINCHORD_MAX_ORDER")
        .env_remove("LINCHORD_FULL_CAP")
        .env_remove("LINCHORD_PARTIAL_CAP")
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = linchord(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn table_cg_formula_row() {
    let doc = json_ok(&["table", "cg", "--n-max", "6", "--source", "formula"]);
    assert_eq!(doc["metadata"]["command"], "table");
    let row = &doc["payload"]["rows"][1];
    assert_eq!(row["g"], 1);
    assert_eq!(strings(&row["counts"]), ["0", "0", "1", "10", "70", "420", "2310"]);
}

#[test]
fn table_cg_single_cell() {
    let doc = json_ok(&["table", "cg", "--n-max", "0"]);
    let rows = doc["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(strings(&rows[0]["counts"]), ["1"]);
}

#[test]
fn table_sources_agree() {
    for kind in ["cg", "cg-m", "shapes"] {
        let a = json_ok(&["table", kind, "--n-max", "6", "--source", "oracle"]);
        let b = json_ok(&["table", kind, "--n-max", "6", "--source", "formula"]);
        assert_eq!(a["payload"]["rows"], b["payload"]["rows"], "{kind}");
    }
    let a = json_ok(&["table", "mm", "--sigma", "2", "--g", "1", "--n-max", "12", "--source", "oracle"]);
    let b = json_ok(&["table", "mm", "--sigma", "2", "--g", "1", "--n-max", "12", "--source", "formula"]);
    assert_eq!(a["payload"]["rows"], b["payload"]["rows"]);
}

#[test]
fn table_mm_oracle() {
    let doc = json_ok(&["table", "mm", "--sigma", "2", "--g", "1", "--n-max", "10", "--source", "oracle"]);
    let counts = strings(&doc["payload"]["rows"][0]["counts"]);
    assert!(counts[..8].iter().all(|c| c == "0"));
    assert_eq!(counts[8], "1");
}

#[test]
fn table_csv() {
    let out = linchord(&["table", "cg", "--n-max", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "g,n,count\n0,0,1\n0,1,1\n0,2,2\n1,0,0\n1,1,0\n1,2,1\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["table", "mm", "--n-max", "5"][..],
        &["table", "cg", "--n-max", "12", "--source", "oracle"],
        &["series", "cg", "--g", "1", "--order", "1001"],
        &["series", "dg", "--g", "1", "--order", "5"],
        &["poly", "pg", "--g", "0"],
        &["diagram", "3;2,1"],
        &["verify", "nonsense"],
        &["frobnicate"],
    ] {
        assert_eq!(linchord(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn order_cap_is_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_linchord"))
        .args(["series", "cg", "--g", "0", "--order", "3"])
        .env("LINCHORD_MAX_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn polynomials() {
    let pg = json_ok(&["poly", "pg", "--g", "2"]);
    assert_eq!(strings(&pg["payload"]["coefficients"]), ["0", "0", "0", "0", "21", "21"]);
    let rg = json_ok(&["poly", "rg", "--g", "1"]);
    assert_eq!(strings(&rg["payload"]["coefficients"]), ["1"]);
    let hz = json_ok(&["poly", "hz", "--n", "1"]);
    assert_eq!(strings(&hz["payload"]["coefficients"]), ["0", "0", "1"]);
}

#[test]
fn series() {
    let cg = json_ok(&["series", "cg", "--g", "1", "--order", "4"]);
    assert_eq!(strings(&cg["payload"]["coefficients"]), ["0", "0", "1", "10", "70"]);
    let dg = json_ok(&["series", "dg", "--g", "1", "--sigma", "1", "--order", "5"]);
    assert_eq!(strings(&dg["payload"]["coefficients"])[..5], ["0", "0", "0", "0", "1"]);
    let c0 = json_ok(&["series", "cg", "--g", "0", "--order", "0"]);
    assert_eq!(strings(&c0["payload"]["coefficients"]), ["1"]);
}

#[test]
fn verify_passes_and_reports() {
    let hz = json_ok(&["verify", "hz", "--n-max", "10"]);
    assert_eq!(hz["payload"]["passed"], true);
    let t3 = json_ok(&["verify", "theorem3", "--g-max", "5"]);
    let names: Vec<&str> = t3["payload"]["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for g in 1..=5 {
        assert!(names.contains(&format!("P_{g} = reference value").as_str()), "{names:?}");
    }
}

#[test]
fn verify_all_with_corruption_fails() {
    let out = linchord(&["verify", "all", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("first counterexample"), "{stderr}");
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["payload"]["passed"], false);
}

#[test]
fn diagram_stats() {
    let doc = json_ok(&["diagram", "4;3,4,1,2"]);
    assert_eq!(doc["payload"]["genus"], 1);
    assert_eq!(doc["payload"]["boundary_components"], 1);
    assert_eq!(doc["payload"]["shape"], true);
    let partial = json_ok(&["diagram", "5;0,5,4,3,2"]);
    assert_eq!(partial["payload"]["genus"], 0);
    assert_eq!(partial["payload"]["stack_sizes"], serde_json::json!([2]));
    assert_eq!(partial["payload"]["projected_shape"], "2;2,1");
}

#[test]
fn asymptotics() {
    let s = json_ok(&["asymptotics", "singularity", "--sigma", "1"]);
    assert!(s["payload"]["singularity"]["lo"].is_string());
    let c = json_ok(&["asymptotics", "constant", "--g", "1", "--n", "200"]);
    assert_eq!(c["payload"]["constant_times_sqrt_pi"], "1/12");
}

#[test]
fn payload_is_deterministic() {
    let a = json_ok(&["table", "shapes", "--n-max", "5", "--source", "oracle"]);
    let b = json_ok(&["table", "shapes", "--n-max", "5", "--source", "oracle"]);
    assert_eq!(a["payload"], b["payload"]);
    assert_eq!(a["metadata"]["parameters"], b["metadata"]["parameters"]);
}
