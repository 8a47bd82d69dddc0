use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

use hdcoh::dirac::{self, WeightMultiset};
use hdcoh::{CartanType, GenSet, RootSystem, Weight};
use serde_json::Value;

fn hdcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdcoh")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = hdcoh(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn parse_weight(v: &Value) -> Weight {
    let parts: Vec<String> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|c| match c {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.clone(),
            other => panic!("bad coordinate {other}"),
        })
        .collect();
    parts.join(",").parse().unwrap()
}

fn parse_multiset(v: &Value) -> WeightMultiset {
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (parse_weight(&e["weight"]), e["mult"].as_u64().unwrap()))
        .collect()
}

fn rs(t: &str) -> RootSystem {
    RootSystem::new(&t.parse::<CartanType>().unwrap()).unwrap()
}

#[test]
fn golden_outputs() {
    assert_eq!(stdout(&["hd", "--type", "A1", "--parabolic", "", "--weight", "0"]), golden("hd_a1_0.json"));
    assert_eq!(stdout(&["hd", "--type", "A1", "--weight", "1/2"]), golden("hd_a1_half.json"));
    assert_eq!(stdout(&["kl", "--type", "A3", "s2", "s2*s1*s3*s2"]), golden("kl_a3_witness.json"));
    assert_eq!(stdout(&["params", "--type", "A2", "--parabolic", "1", "--weight", "0,0"]), golden("params_a2_1_0.json"));
    assert_eq!(
        stdout(&["simple", "--module", "verma", "--type", "A1", "--weight", "-1", "--format", "table"]),
        golden("simple_a1_rho.txt")
    );
}

#[test]
fn hd_round_trips_to_library_values() {
    for (t, i, w) in [("A1", "", "0"), ("A2", "1", "0,0"), ("B2", "", "0,1/2"), ("A3", "2", "-2,0,-2"), ("G2", "", "-1,0")] {
        let v: Value = serde_json::from_str(&stdout(&["hd", "--type", t, "--parabolic", i, "--weight", w])).unwrap();
        assert_eq!(v["schema"], 1);
        let lam: Weight = w.parse().unwrap();
        assert_eq!(parse_weight(&v["lambda"]), lam);
        let set: GenSet = i.parse().unwrap();
        let expect = dirac::dirac_cohomology_simple(&rs(t), set, &lam).unwrap();
        assert_eq!(parse_multiset(&v), expect, "{t} {i} {w}");
    }
}

#[test]
fn params_round_trip() {
    let v: Value = serde_json::from_str(&golden("params_a2_1_0.json")).unwrap();
    let sets = |k: &str| -> Vec<Weight> { v[k].as_array().unwrap().iter().map(parse_weight).collect() };
    let (hull, link) = dirac::geometric_params(&rs("A2"), "1".parse().unwrap(), &"0,0".parse().unwrap()).unwrap();
    assert_eq!(sets("hull_set"), hull.into_iter().collect::<Vec<_>>());
    assert_eq!(sets("linkage_set"), link.into_iter().collect::<Vec<_>>());
    assert_eq!(v["flags"]["chain"], true);
    assert_eq!(v["flags"]["geometric_equal"], true);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| hdcoh(args).status.code().unwrap();
    assert_eq!(code(&["hd", "--type", "A2", "--parabolic", "1", "--weight", "-1,0"]), 1);
    assert_eq!(code(&["hd", "--type", "A2", "--weight", "0,x"]), 1);
    assert_eq!(code(&["hd", "--type", "A2"]), 1);
    assert_eq!(code(&["nonsense"]), 1);
    assert_eq!(code(&["simple", "--module", "parabolic", "--type", "A2", "--weight", "-1,0"]), 1);
    assert_eq!(code(&["verify", "--plan", "A1"]), 0);
    assert_eq!(code(&["verify", "--plan", "A3"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn error_messages_name_the_condition() {
    let err = |args: &[&str]| String::from_utf8(hdcoh(args).stderr).unwrap();
    assert!(err(&["hd", "--type", "A2", "--parabolic", "1", "--weight", "-1,0"]).contains("λ ∉ Λ_I^+"));
    assert!(err(&["kostant", "--type", "A2", "--weight", "-1,0"]).contains("λ singular"));
    assert!(err(&["hd", "--type", "A2", "--weight", "0,1/x"]).contains("position"));
    assert!(err(&["roots", "--type", "E9"]).contains("position 0"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["params", "--type", "B2", "--weight", "0,0"][..],
        &["verify", "--plan", "A1,A2", "--workers", "2"],
        &["hd", "--type", "G2", "--parabolic", "2", "--weight", "0,0", "--format", "table"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
    assert_eq!(stdout(&["verify", "--plan", "A1,A2"]), stdout(&["verify", "--plan", "A1,A2", "--workers", "3"]));
}

#[test]
fn root_basis_converts() {
    // α1 = 2ϖ1 - ϖ2 in A2.
    let a = stdout(&["wset", "--type", "A2", "--weight", "1,0", "--basis", "root"]);
    let b = stdout(&["wset", "--type", "A2", "--weight", "2,-1"]);
    assert_eq!(a, b);
}

#[test]
fn kl_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let p = path.to_str().unwrap();
    let first = stdout(&["kl", "--type", "B3", "e", "s1*s2*s3*s2*s1", "--cache", p]);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(v["fingerprint"].as_str().unwrap().starts_with("B3:"));
    assert!(!v["columns"].as_array().unwrap().is_empty());
    assert_eq!(stdout(&["kl", "--type", "B3", "e", "s1*s2*s3*s2*s1", "--cache", p]), first);
    // stale fingerprint: another system reuses the file without error
    let other = stdout(&["kl", "--type", "A3", "s2", "s2*s1*s3*s2", "--cache", p, "--format", "table"]);
    assert_eq!(other, "1 + q\n");
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(stdout(&["kl", "--type", "B3", "e", "s1*s2*s3*s2*s1", "--cache", p]), first);
}

#[test]
fn plan_file_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let plan = dir.path().join("plan.json");
    std::fs::write(&plan, r#"{"systems": [{"type": "A1", "parabolics": [""], "seeds": ["0", "-1", "1/2"]}]}"#).unwrap();
    let v: Value = serde_json::from_str(&stdout(&["verify", "--plan", plan.to_str().unwrap()])).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["coverage"][0]["weights"], 5);
    assert!(v.get("timings_ns").is_none());
    let dot = dir.path().join("b.dot");
    stdout(&["kl", "--type", "A2", "e", "s1*s2*s1", "--emit-dot", dot.to_str().unwrap()]);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph bruhat"));
    assert_eq!(text.matches("->").count(), 8);
    let mut stats = BTreeMap::new();
    for (k, s) in v["stats"].as_object().unwrap() {
        stats.insert(k.clone(), s["failed"].as_u64().unwrap());
    }
    assert!(stats.values().all(|&f| f == 0));
}

#[test]
fn other_subcommands() {
    let v: Value = serde_json::from_str(&stdout(&["roots", "--type", "A2", "--parabolic", "1"])).unwrap();
    assert_eq!(v["weyl_order"], 6);
    assert_eq!(parse_weight(&v["rho_l"]), "1,-1/2".parse().unwrap());
    let v: Value = serde_json::from_str(&stdout(&["pkl", "--type", "A2", "--J", "1", "--y", "q", "e", "s2"])).unwrap();
    assert_eq!(v["poly"], serde_json::json!([1]));
    assert_eq!(v["r_poly"], serde_json::json!([-1, 1]));
    let v: Value = serde_json::from_str(&stdout(&["klv", "--type", "A1", "--weight", "0", "e", "s1"])).unwrap();
    assert_eq!(v["poly"], serde_json::json!([1]));
    let v: Value = serde_json::from_str(&stdout(&["kostant", "--type", "A1", "--weight", "0"])).unwrap();
    assert_eq!(v["kostant"], true);
    let v: Value = serde_json::from_str(&stdout(&["hd-verma", "--type", "A2", "--parabolic", "1", "--weight", "0,0"])).unwrap();
    assert_eq!(parse_multiset(&v), [("1,1".parse().unwrap(), 1)].into_iter().collect());
    let v: Value = serde_json::from_str(&stdout(&["verify", "--plan", "A1", "--timings"])).unwrap();
    assert!(v["timings_ns"].is_object());
}
