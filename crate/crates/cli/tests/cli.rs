use qcoord_cli::{run, Outcome};
use serde_json::Value;

fn ok(args: &[&str]) -> String {
    let out = run(std::iter::once("qcoord").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap()
}

fn err(args: &[&str]) -> (Outcome, Value) {
    let out = run(std::iter::once("qcoord").chain(args.iter().copied()));
    assert_ne!(out.code, 0, "{args:?} should fail");
    let v: Value = serde_json::from_str(&out.stderr).unwrap();
    (out, v)
}

#[test]
fn qdet_two() {
    assert_eq!(ok(&["qdet", "-n", "2"]), "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]\n");
}

#[test]
fn qdet_output_parses_back() {
    let d = ok(&["qdet", "-n", "3"]);
    let again = ok(&["nf", d.trim(), "-n", "3"]);
    assert_eq!(d, again);
    assert_eq!(ok(&["central", d.trim(), "-n", "3"]), "central\n");
}

#[test]
fn strata_generic_plane() {
    let v = json(&["strata", "--preset", "affine", "-n", "2", "-q", "generic"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let ranks: Vec<u64> = rows.iter().map(|r| r["center_rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [0, 1, 1, 0]);
}

#[test]
fn center_single_parameter() {
    let v = json(&["center", "-n", "3"]);
    assert_eq!(v["basis"], serde_json::json!([[1, -1, 1]]));
}

#[test]
fn patterns_one() {
    let v = json(&["patterns", "enumerate", "-n", "1"]);
    assert_eq!(v["count"], 2);
    let v = json(&["patterns", "enumerate", "-n", "2", "--check"]);
    assert_eq!(v["count"], 13);
    assert!(v["patterns"].as_array().unwrap().iter().all(|p| p["quotient"]["faithful"] == true));
}

#[test]
fn deterministic() {
    for args in [
        vec!["patterns", "enumerate", "-n", "3"],
        vec!["--json", "strata", "-n", "4", "-q", "generic"],
        vec!["--json", "patterns", "verify", "-n", "2"],
        vec!["delta", "[1,2|1,2]", "-n", "2"],
    ] {
        assert_eq!(ok(&args), ok(&args));
    }
}

#[test]
fn bialgebra_commands() {
    let out = ok(&["delta", "X[1,1]", "-n", "2", "--counit"]);
    assert!(out.contains("X[1,1]@1*X[1,1]@2 + X[1,2]@1*X[2,1]@2"), "{out}");
    assert!(out.ends_with("counit: 1\n"));
    let v = json(&["mu-star", "-t", "2", "[1,2|1,2]", "-n", "2"]);
    assert_eq!(v["result"], "0");
}

#[test]
fn weights() {
    assert_eq!(
        json(&["weight", "X[1,1]*X[2,2]", "-n", "2", "--grading", "matrix"])["weight"],
        serde_json::json!([1, 1, 1, 1])
    );
    assert_eq!(ok(&["weight", "x1 + x2", "--preset", "affine", "-n", "2"]), "not homogeneous\n");
    assert_eq!(ok(&["stable", "X[1,2]", "-n", "2"]), "stable\n");
}

#[test]
fn twist_and_quotient_map() {
    let v = json(&["twist", "-n", "4", "-q", "generic"]);
    assert_eq!(v["relations_hold"], true);
    let v = json(&["quotient-map", "l1,0,0"]);
    assert_eq!(v["shape"], "axis");
    assert_eq!(v["generators"], serde_json::json!(["x1 - l1", "x2", "x3"]));
    assert_eq!(ok(&["fibre", "l1,l2,l3", "t1*l1,t1*t3*l2,t3*l3"]), "true\n");
    assert_eq!(ok(&["fibre", "l1,l2,l3", "l1,t*l2,l3"]), "false\n");
    let v = json(&["preimage", "3"]);
    assert_eq!(v["equations"], serde_json::json!(["l3 = 0"]));
}

#[test]
fn errors_are_objects() {
    let (out, v) = err(&["bogus"]);
    assert_eq!(out.code, 2);
    assert_eq!(v["error"]["kind"], "usage");
    let (_, v) = err(&["nf", "X[1,1]*(", "-n", "2"]);
    assert_eq!(v["error"]["kind"], "expression");
    let (_, v) = err(&["qminor", "--rows", "1,1", "--cols", "1,2", "-n", "2"]);
    assert_eq!(v["error"]["kind"], "minor");
    let (_, v) = err(&["patterns", "enumerate", "-n", "9"]);
    assert_eq!(v["error"]["kind"], "patterns");
    let (_, v) = err(&["nf", "x1", "--preset", "affine", "-n", "2", "-q", "2"]);
    assert!(v["error"]["message"].as_str().unwrap().contains("numeric"));
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wb.toml");
    std::fs::write(
        &path,
        "params = [\"p\"]\noutput = \"json\"\n[aliases]\nq = \"p^2\"\n[algebra]\npreset = \"quantum-affine\"\nn = 2\nq = \"q\"\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let v: Value = serde_json::from_str(&ok(&["--config", p, "nf", "x2*x1"])).unwrap();
    assert_eq!(v["result"], "p^-2*x1*x2");
}
