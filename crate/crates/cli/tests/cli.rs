use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagquot")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn golden(name: &str, args: &[&str]) {
    let want = fs::read_to_string(fixture(name)).expect("fixture exists");
    assert_eq!(stdout(args), want, "output of {args:?} differs from {name}");
}

#[test]
fn intersection_table_matches_golden() {
    golden("intersections.md", &["table", "intersections", "--format", "md"]);
}

#[test]
fn mori_faces_match_golden() {
    golden("mori_faces.md", &["table", "mori-faces"]);
}

#[test]
fn nef_generators_match_golden() {
    golden("nef_generators.md", &["table", "nef-gens"]);
}

#[test]
fn quotient_fan_matches_golden() {
    golden("quotient_fan.txt", &["fan", "quotient"]);
    let s = stdout(&["fan", "quotient"]);
    for ray in ["(-1,-1)", "(-1,0)", "(1,-1)", "(0,1)"] {
        assert!(s.lines().next().unwrap().contains(ray));
    }
    assert_eq!(s.matches(": A1").count(), 1);
}

#[test]
fn octagon_fan_matches_golden() {
    golden("octagon_fan.txt", &["fan", "octagon"]);
}

#[test]
fn stable_verify_matches_golden() {
    golden("verify_all.txt", &["verify", "all", "--stable"]);
}

#[test]
fn every_group_passes() {
    for g in
        ["weyl", "fans", "subdivisions", "toric", "table", "relations", "mori", "nef", "antican", "quadrics", "aut"]
    {
        let out = run(&["verify", g, "--stable"]);
        assert_eq!(out.status.code(), Some(0), "group {g}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["bogus"],
        vec!["verify", "nothing"],
        vec!["table", "intersections", "--format", "csv"],
        vec!["fan", "subfan", "q"],
        vec!["map", "weyl", "r3"],
        vec!["verify", "all", "--nope"],
        vec![],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn coverage_manifest_is_exercised() {
    let v: Value = serde_json::from_str(&stdout(&["verify", "all", "--stable", "--format", "json"])).unwrap();
    assert_eq!(v["schema"], 1);
    let checks = v["checks"].as_array().unwrap();
    let manifest = fs::read_to_string(fixture("coverage.txt")).unwrap();
    let ids: Vec<&str> =
        manifest.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty()).collect();
    assert!(ids.len() > 50);
    for id in ids {
        let c = checks.iter().find(|c| c["id"] == id).unwrap_or_else(|| panic!("{id} is not run"));
        assert_eq!(c["pass"], true, "{id} fails");
        assert!(c.get("elapsed_us").is_none());
    }
}

#[test]
fn timings_present_without_stable() {
    let v: Value = serde_json::from_str(&stdout(&["verify", "toric", "--format", "json"])).unwrap();
    assert!(v["checks"][0]["elapsed_us"].is_u64());
}

#[test]
fn emit_is_deterministic() {
    let a = stdout(&["emit", "json", "--stable"]);
    let b = stdout(&["emit", "json", "--stable"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["intersections"]["rows"][4][4], "-1/2");
    assert_eq!(v["mori_faces"]["f_vector"], serde_json::json!([8, 16, 10]));
    let md = stdout(&["emit", "md", "--stable"]);
    assert!(md.contains(&fs::read_to_string(fixture("intersections.md")).unwrap()));
}

#[test]
fn emit_writes_file() {
    let path = std::env::temp_dir().join(format!("flagquot-emit-{}.md", std::process::id()));
    let out = run(&["emit", "md", "--stable", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    fs::remove_file(&path).unwrap();
    assert!(text.starts_with("# flagquot report"));
}

#[test]
fn exact_values_have_no_decimals() {
    let s = stdout(&["fan", "xe", "--format", "json"]);
    assert!(s.contains("\"-1/2\""));
    assert!(!s.contains("0.5"));
}

#[test]
fn weyl_maps() {
    assert!(stdout(&["map", "weyl", "r1"]).starts_with("map: (x - y + z : z : y)\ndegree: 1\nbase points: none\n"));
    let s = stdout(&["map", "weyl", "r2"]);
    assert!(s.starts_with("map: (y^2 : x*y : -x*z)\ndegree: 2\n"));
    assert!(s.contains("(0:0:1)") && s.contains("(1:0:0)"));
    assert!(stdout(&["map", "weyl", "12121212"]).starts_with("map: (x : y : z)"));
    let v: Value = serde_json::from_str(&stdout(&["map", "weyl", "w0", "--format", "json"])).unwrap();
    assert_eq!(v["word"], "w0");
}

#[test]
fn subfans() {
    let s = stdout(&["fan", "subfan", "p"]);
    assert!(s.contains("ok: true"));
    assert!(!s.contains("A1"));
    assert!(stdout(&["fan", "subfan", "circ"]).starts_with(&stdout(&["fan", "quotient"])[..40]));
}
