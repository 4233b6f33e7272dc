use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn linres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linres")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = linres(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "linres-report/1");
    doc
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bipyramid_is_not_linear() {
    let doc = json(&["analyze", path(&data("hexahedron.clt")), "--oracle"]);
    for fa in doc["results"][0]["analysis"]["ideal"]["per_field"].as_array().unwrap() {
        assert_eq!(fa["regularity"], 4);
        assert_eq!(fa["linear"], false);
        assert_eq!(fa["oracle_agrees"], true);
    }
    // Sparse triples: β_{1,3}(S/I) = 4.
    let entries = &doc["results"][0]["analysis"]["ideal"]["per_field"][0]["table"]["entries"];
    assert!(entries.as_array().unwrap().contains(&serde_json::json!([1, 3, 4])), "{entries}");
}

#[test]
fn full_clutter_circuit_ideal_is_linear() {
    let doc = json(&["analyze", path(&data("cnd-6-3.clt")), "--ideal", "circuits", "--field", "p:3"]);
    let fa = &doc["results"][0]["analysis"]["ideal"]["per_field"][0];
    assert_eq!(fa["field"], "GF(3)");
    assert_eq!((fa["linear"].clone(), fa["regularity"].clone()), (Value::Bool(true), Value::from(3)));
}

#[test]
fn zero_ideal_has_no_regularity() {
    let doc = json(&["analyze", path(&data("maximal-5-3.clt"))]);
    let fa = &doc["results"][0]["analysis"]["ideal"]["per_field"][0];
    assert_eq!(fa["regularity"], Value::Null);
    assert_eq!(fa["depth"], Value::Null);
    assert_eq!(fa["linear"], true);
}

#[test]
fn several_files_keep_input_order() {
    let files = ["octahedron.clt", "hexahedron.clt", "cnd-6-3.clt", "reducible.clt"].map(data);
    let mut args = vec!["analyze", "--jobs", "3"];
    args.extend(files.iter().map(|f| path(f)));
    let doc = json(&args);
    let names: Vec<&str> = doc["results"].as_array().unwrap().iter().map(|r| r["file"].as_str().unwrap()).collect();
    assert_eq!(names, files.iter().map(|f| path(f)).collect::<Vec<_>>());
}

#[test]
fn reduction_certificate_replays() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = linres(&["reduce", path(&data("reducible.clt")), "--certificate", path(&cert)]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("LinearByReduction"));

    let ok = linres(&["replay", path(&cert), path(&data("reducible.clt"))]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));

    let wrong = linres(&["replay", path(&cert), path(&data("hexahedron.clt"))]);
    assert_eq!(wrong.status.code(), Some(6));

    let text = fs::read_to_string(&cert).unwrap();
    let truncated = dir.path().join("truncated.json");
    fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(linres(&["replay", path(&truncated), path(&data("reducible.clt"))]).status.code(), Some(2));
}

#[test]
fn tampered_step_reports_its_index() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    assert!(linres(&["reduce", path(&data("reducible.clt")), "--certificate", path(&cert)]).status.success());
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    doc["steps"][2]["after_hash"] = Value::from("0".repeat(64));
    fs::write(&cert, doc.to_string()).unwrap();
    let out = linres(&["replay", path(&cert), path(&data("reducible.clt"))]);
    assert_eq!(out.status.code(), Some(6));
    assert!(String::from_utf8_lossy(&out.stderr).contains("step 2"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn sphere_pipeline_and_its_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("sphere.json");
    let ico = data("icosahedron.clt");
    let doc = json(&["triangulate", path(&ico), "--reduce", "--certificate", path(&cert)]);
    let r = &doc["results"][0];
    assert_eq!(r["report"]["euler_characteristic"], 2);
    assert_eq!(r["nonlinearity"]["reduction"]["verdict"], "NonlinearByBaseCase");
    assert_eq!(linres(&["replay", path(&cert), path(&ico)]).status.code(), Some(0));
}

#[test]
fn non_sphere_exits_with_five() {
    assert_eq!(linres(&["triangulate", path(&data("reducible.clt"))]).status.code(), Some(5));
}

#[test]
fn bound_and_parse_failures() {
    assert_eq!(linres(&["analyze", path(&data("icosahedron.clt")), "--bound", "10"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.clt");
    fs::write(&bad, "5 3\n1 2 9\n").unwrap();
    let out = linres(&["analyze", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(linres(&["analyze", "/nonexistent.clt"]).status.code(), Some(2));
}

#[test]
fn generation_is_deterministic() {
    for kind in ["stacked", "random_sphere"] {
        let a = linres(&["gen", kind, "--n", "11", "--seed", "42"]);
        let b = linres(&["gen", kind, "--n", "11", "--seed", "42"]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
        let c = linres(&["gen", kind, "--n", "11", "--seed", "43"]);
        assert_ne!(a.stdout, c.stdout);
    }
    assert_eq!(linres(&["gen", "stacked"]).status.code(), Some(1));
}

#[test]
fn generated_spheres_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.json");
    assert!(linres(&["gen", "random_sphere", "--n", "9", "--seed", "3", "--json", "--out", path(&file)]).status.success());
    let doc = json(&["triangulate", path(&file), "--subclutters"]);
    let checks = doc["results"][0]["subclutters"].as_array().unwrap();
    assert_eq!(checks.len(), 2 * 9 - 4);
}
