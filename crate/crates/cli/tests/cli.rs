use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cli")).args(args).output().expect("runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn catalog_and_verify() {
    let d = tempfile::tempdir().unwrap();
    let k10 = path(d.path(), "k10.json");
    assert_eq!(cli(&["catalog", "k10", "-o", &k10]).status.code(), Some(0));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&k10).unwrap()).unwrap();
    assert_eq!(file["even"].as_array().unwrap().len() + file["odd"].as_array().unwrap().len(), 10);
    let o = cli(&["verify", &k10, "--envelope", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rep = stdout_json(&o);
    assert_eq!(rep["holds"], Value::Bool(true));
    assert_eq!(rep["envelope"]["holds"], Value::Bool(true));

    let dt = path(d.path(), "dt.json");
    assert_eq!(cli(&["catalog", "dt", "--t", "2/3", "-o", &dt]).status.code(), Some(0));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&dt).unwrap()).unwrap();
    assert_eq!(file["even"].as_array().unwrap().len() + file["odd"].as_array().unwrap().len(), 4);
    assert_eq!(cli(&["verify", &dt]).status.code(), Some(0));
}

#[test]
fn corrupted_file_fails_with_witness() {
    let d = tempfile::tempdir().unwrap();
    let k10 = path(d.path(), "k10.json");
    cli(&["catalog", "k10", "-o", &k10]);
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&k10).unwrap()).unwrap();
    for p in file["products"].as_array_mut().unwrap() {
        let pair = (p["left"].as_str().unwrap(), p["right"].as_str().unwrap());
        if pair == ("v1", "v2") || pair == ("v2", "v1") {
            p["value"] = serde_json::json!({"e": "3"});
        }
    }
    let bad = path(d.path(), "bad.json");
    std::fs::write(&bad, file.to_string()).unwrap();
    let o = cli(&["verify", &bad]);
    assert_eq!(o.status.code(), Some(2));
    let rep = stdout_json(&o);
    assert_eq!(rep["super_jordan"]["witness"]["indices"].as_array().unwrap().len(), 4);
    assert_eq!(rep["operator_identity"]["holds"], Value::Bool(false));
}

#[test]
fn one_sided_products_are_inferred_and_conflicts_rejected() {
    let d = tempfile::tempdir().unwrap();
    let f = path(d.path(), "a.json");
    std::fs::write(
        &f,
        r#"{"even":["e"],"odd":["x","y"],"unit":null,"products":[
            {"left":"e","right":"e","value":{"e":"1"}},
            {"left":"e","right":"x","value":{"x":"1/2"}},
            {"left":"e","right":"y","value":{"y":"1/2"}},
            {"left":"x","right":"y","value":{"e":"1"}}]}"#,
    )
    .unwrap();
    let o = cli(&["verify", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("inferred"));
    std::fs::write(
        &f,
        r#"{"even":["e"],"odd":["x","y"],"products":[
            {"left":"x","right":"y","value":{"e":"1"}},
            {"left":"y","right":"x","value":{"e":"1"}}]}"#,
    )
    .unwrap();
    assert_eq!(cli(&["verify", &f]).status.code(), Some(1));
    std::fs::write(&f, r#"{"even":["e"],"odd":[],"products":[],"extra":1}"#).unwrap();
    assert_eq!(cli(&["verify", &f]).status.code(), Some(1));
}

#[test]
fn wpt_on_split_and_obstructed_extensions() {
    let d = tempfile::tempdir().unwrap();
    let (b, n) = (path(d.path(), "b.json"), path(d.path(), "n.json"));
    assert_eq!(cli(&["catalog", "cx-dt", "--t", "1", "-o", &b, "--radical", &n]).status.code(), Some(0));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(file["even"].as_array().unwrap().len() + file["odd"].as_array().unwrap().len(), 8);
    let o = cli(&["wpt", &b, &n, "--dims"]);
    assert_eq!(o.status.code(), Some(2));
    let rep = stdout_json(&o);
    assert_eq!(rep["feasible"], Value::Bool(false));
    assert_eq!(rep["witness"]["verified"], Value::Bool(true));
    assert_eq!(rep["dims"]["H2"], Value::from(1));

    let o = cli(&["catalog", "cx-dt", "--t", "-1", "-o", &b, "--radical", &n]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let rep = stdout_json(&cli(&["wpt", &b, &n]));
    assert_eq!(rep["feasible"], Value::Bool(true));
    assert_eq!(rep["dims"], Value::Null);

    let (b, n) = (path(d.path(), "s.json"), path(d.path(), "sn.json"));
    cli(&["catalog", "cx-superform-odd", "--n", "3", "--m", "1", "-o", &b, "--radical", &n]);
    assert_eq!(cli(&["wpt", &b, &n]).status.code(), Some(2));
}

#[test]
fn wpt_split_null_extension_has_zero_corrections() {
    let d = tempfile::tempdir().unwrap();
    let f = path(d.path(), "e.json");
    std::fs::write(
        &f,
        r#"{"even":["e","a"],"odd":[],"products":[
            {"left":"e","right":"e","value":{"e":"1"}},
            {"left":"e","right":"a","value":{"a":"1"}}]}"#,
    )
    .unwrap();
    let n = path(d.path(), "n.json");
    std::fs::write(&n, r#"{"basis":[{"a":"1"}]}"#).unwrap();
    let o = cli(&["wpt", &f, &n]);
    assert_eq!(o.status.code(), Some(0));
    let rep = stdout_json(&o);
    assert_eq!(rep["corrections"], serde_json::json!({"e": {}}));
    std::fs::write(&n, r#"{"basis":[{"e":"1"}]}"#).unwrap();
    assert_eq!(cli(&["wpt", &f, &n]).status.code(), Some(1));
}

#[test]
fn h2_and_peirce() {
    let d = tempfile::tempdir().unwrap();
    let (k, m) = (path(d.path(), "k.json"), path(d.path(), "m.json"));
    cli(&["catalog", "k10", "-o", &k]);
    assert_eq!(cli(&["regular", &k, "-o", &m]).status.code(), Some(0));
    let rep = stdout_json(&cli(&["h2", &k, &m]));
    assert_eq!(rep["H2"], Value::from(0));
    assert_eq!(rep["Z2"], rep["B2"]);

    let o = cli(&["peirce", &k, "--idempotents", "e,f"]);
    assert_eq!(o.status.code(), Some(0));
    let dims: Vec<(String, String, u64)> = stdout_json(&o)["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["i"].as_str().unwrap().into(), c["j"].as_str().unwrap().into(), c["dim"].as_u64().unwrap()))
        .collect();
    assert!(dims.contains(&("e".into(), "e".into(), 5)));
    assert!(dims.contains(&("f".into(), "f".into(), 1)));
    assert!(dims.contains(&("e".into(), "f".into(), 4)));

    let (h, hm, k3) = (path(d.path(), "h.json"), path(d.path(), "hm.json"), path(d.path(), "k3.json"));
    cli(&["catalog", "k3-hull", "-o", &h]);
    cli(&["catalog", "k3", "-o", &k3]);
    assert_eq!(cli(&["regular", &k3, "--hull", "-o", &hm]).status.code(), Some(0));
    assert_eq!(stdout_json(&cli(&["h2", &h, &hm]))["H2"], Value::from(0));
    let o = cli(&["peirce", &h, "--idempotents", "1"]);
    assert_eq!(stdout_json(&o)["components"][0]["dim"], Value::from(4));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cli(&["catalog", "dt"]).status.code(), Some(1));
    assert_eq!(cli(&["catalog", "nope"]).status.code(), Some(1));
    assert_eq!(cli(&["verify"]).status.code(), Some(1));
    assert_eq!(cli(&["verify", "x.json", "--bogus"]).status.code(), Some(1));
    assert_eq!(cli(&["catalog", "superform", "--n", "3", "--m", "0"]).status.code(), Some(1));
    assert_eq!(cli(&["--help"]).status.code(), Some(0));
}

#[test]
fn emitted_files_round_trip() {
    let d = tempfile::tempdir().unwrap();
    let (a, b) = (path(d.path(), "a.json"), path(d.path(), "b.json"));
    cli(&["catalog", "superform", "--n", "2", "--m", "1", "-o", &a]);
    let first = std::fs::read_to_string(&a).unwrap();
    let o = cli(&["catalog", "superform", "--n", "2", "--m", "1"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), first);
    std::fs::write(&b, &first).unwrap();
    assert_eq!(cli(&["verify", &b]).status.code(), Some(0));
}
