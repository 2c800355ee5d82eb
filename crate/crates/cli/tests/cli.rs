use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fincat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fincat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

/// A scratch file unique to this test process.
fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fincat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn category_of_the_pseudocircle() {
    let o = fincat(&["invariant", "cat", "--space", "catalog:pseudocircle", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["value"], 1);
    let parts = j["certificate"]["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    let members: Vec<&Value> = parts.iter().map(|p| &p["members"]).collect();
    assert!(members.contains(&&serde_json::json!(["a1", "b1", "b2"])));
    assert!(members.contains(&&serde_json::json!(["a2", "b1", "b2"])));
}

#[test]
fn category_of_the_square() {
    let o = fincat(&["invariant", "cat", "--space", "catalog:pseudocircle-squared", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "cat = 3");
}

#[test]
fn distance_of_a_map_to_itself() {
    let f = fincat(&["show", "--map", "catalog:pr1:pseudocircle", "--json"]);
    let path = scratch("f.json", &stdout(&f));
    let p = path.to_str().unwrap();
    let o = fincat(&["invariant", "dist", "--map", p, "--map", p, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"], 0);
}

#[test]
fn projections_of_the_square() {
    for extra in [None, Some("--direct")] {
        let mut args = vec!["invariant", "dist", "--map", "pr1:pseudocircle", "--map", "pr2:pseudocircle", "--quiet"];
        args.extend(extra);
        let o = fincat(&args);
        assert_eq!(stdout(&o).trim(), "D = 3");
    }
    assert_eq!(stdout(&fincat(&["invariant", "tc", "--space", "pseudocircle", "--quiet"])).trim(), "TC = 3");
}

#[test]
fn homotopy_verdicts() {
    let o = fincat(&["homotopic", "--map", "id:pseudocircle", "--map", "const:pseudocircle:a1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "not homotopic");

    // id ≤ const at the top: a fence of two comparable maps
    let o = fincat(&["homotopic", "--map", "id:chain-2", "--map", "const:chain-2:c1", "--json"]);
    let j = json(&o);
    assert_eq!(j["homotopic"], true);
    assert_eq!(j["fence"]["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn budget_exhaustion_exits_2() {
    let o = fincat(&["invariant", "cat", "--space", "pseudocircle-squared", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fincat(&["homotopic", "--map", "const:pseudocircle-wedge:a1", "--map", "const:pseudocircle-wedge:b3", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn input_errors_exit_1() {
    let bad = scratch("bad.json", "{\"points\": [\"a\"");
    let cases: Vec<Vec<&str>> = vec![
        vec!["invariant", "cat", "--space", bad.to_str().unwrap()],
        vec!["invariant", "cat", "--space", "catalog:torus"],
        vec!["invariant", "cat", "--space", "discrete-2"],
        vec!["invariant", "dist", "--map", "id:pseudocircle", "--map", "id:diamond"],
        vec!["invariant", "liftcat", "--map", "id:pseudocircle"],
        vec!["invariant", "cat", "--space", "pseudocircle", "--pointed"],
        vec!["invariant", "cat", "--space", "pseudocircle@b1", "--pointed", "--wg"],
    ];
    for args in cases {
        let o = fincat(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn pointed_flavor() {
    let o = fincat(&["invariant", "cat", "--space", "pseudocircle@b1", "--pointed", "--quiet"]);
    assert_eq!(stdout(&o).trim(), "cat = 1");
    let o = fincat(&["invariant", "cat", "--space", "pseudocircle@a1", "--pointed", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "cat = infinite");
}

#[test]
fn whitehead_route() {
    let o = fincat(&["invariant", "secat", "--map", "incl-u1", "--wg", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let op = fincat(&["invariant", "secat", "--map", "incl-u1", "--json"]);
    let (wg, op) = (json(&o), json(&op));
    assert_eq!(op["value"], 1);
    // op ≤ WG, with ∞ on top
    if let Some(n) = wg["value"].as_str().and_then(|v| v.parse::<u64>().ok()) {
        assert!(n >= 1);
    }
}

#[test]
fn show_round_trips_catalog_spaces() {
    for name in ["singleton", "chain-3", "discrete-2", "pseudocircle", "pseudocircle-squared", "pseudocircle-wedge", "diamond", "pseudocircle@b2"] {
        let first = fincat(&["show", "--space", name, "--json"]);
        let path = scratch(&format!("{name}.json"), &stdout(&first));
        let again = fincat(&["show", "--space", path.to_str().unwrap(), "--json"]);
        assert_eq!(stdout(&first), stdout(&again), "{name}");
        let expected = fincat::catalog::space(name).unwrap().to_json();
        assert_eq!(serde_json::from_slice::<fincat::SpaceJson>(&first.stdout).unwrap(), expected);
    }
}

#[test]
fn suite_exit_codes() {
    let empty = scratch("empty.json", r#"{"properties": []}"#);
    let o = fincat(&["suite", empty.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["schema_version"], 1);
    assert!(j["properties"].as_array().unwrap().is_empty());

    let small = scratch("small.json", r#"{"instances": 10, "properties": ["distance-symmetry", "cat-product"]}"#);
    let out = small.with_extension("report.json");
    let o = fincat(&["suite", small.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("distance-symmetry"));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(saved["properties"].as_array().unwrap().len(), 2);

    let unfiltered = scratch(
        "unfiltered.json",
        r#"{"instances": 2, "properties": ["cat-product"], "normality_filter": false, "inject": ["pseudocircle"]}"#,
    );
    let o = fincat(&["suite", unfiltered.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL cat-product #0"));

    let bad = scratch("badsuite.json", r#"{"properties": ["nope"]}"#);
    assert_eq!(fincat(&["suite", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn fixed_seed_output_is_stable() {
    let cfg = scratch("stable.json", r#"{"instances": 5, "generator": {"seed": 3}, "properties": ["liftcat-le-secat"]}"#);
    let strip = |o: Output| {
        let mut j = json(&o);
        j["millis"] = 0.into();
        for p in j["properties"].as_array_mut().unwrap() {
            p["millis"] = 0.into();
        }
        j
    };
    let a = strip(fincat(&["suite", cfg.to_str().unwrap(), "--json"]));
    let b = strip(fincat(&["suite", cfg.to_str().unwrap(), "--json"]));
    assert_eq!(a, b);
    let c1 = stdout(&fincat(&["invariant", "tc", "--space", "pseudocircle", "--json"]));
    let c2 = stdout(&fincat(&["invariant", "tc", "--space", "pseudocircle", "--json"]));
    assert_eq!(c1, c2);
}

#[test]
fn catalog_lists_names() {
    let o = fincat(&["catalog"]);
    assert!(stdout(&o).contains("pseudocircle-wedge"));
    assert!(stdout(&o).contains("incl-u1"));
}
