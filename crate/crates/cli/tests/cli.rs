use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn sample(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setreal")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report on stdout")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    for (file, want) in [("d4_inward_f2.json", 1), ("star7_f3.json", 0), ("indicator_a3.json", 0), ("intro_grid_f2.json", 1)] {
        for variant in ["plain", "gset"] {
            let out = run(&["check", s(&sample(file)), "--variant", variant]);
            assert_eq!(code(&out), want, "{file} {variant}");
            assert_eq!(report(&out)["outputs"]["realizable"], want == 0);
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let a = run(&["check", s(&sample("star7_f3.json")), "--seed", "4"]);
    let b = run(&["check", s(&sample("star7_f3.json")), "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let r = report(&a);
    assert_eq!(r["seed"], 4);
    assert!(r["input_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn witness_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let out = run(&["check", s(&sample("star7_f3.json")), "--witness", s(&w)]);
    assert_eq!(code(&out), 0);
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    // Seven arms of dimension 2 and a center of dimension 3 over GF(3).
    assert_eq!(j["sections"]["c"].as_array().unwrap().len(), 13);
    assert_eq!(report(&out)["witness_paths"][0], s(&w));
}

#[test]
fn made_band_checks_by_characteristic() {
    let dir = tempfile::tempdir().unwrap();
    for (m, want) in [(4, 0), (3, 1)] {
        let f = dir.path().join(format!("band{m}.json"));
        let made = run(&["make", "band", "--shape", "a3tilde", "--f", "1,1", "--m", &m.to_string(), "--field", "2", "1", "-o", s(&f)]);
        assert_eq!(code(&made), 0);
        assert_eq!(code(&run(&["check", s(&f)])), want, "m={m}");
    }
}

#[test]
fn claw_is_not_indicator_only() {
    let out = run(&["shape-classify", s(&sample("claw_out.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["outputs"]["indicator_only"], false);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not indicator-only"));
    let out = run(&["shape-classify", s(&sample("a3_shape.json"))]);
    assert_eq!(report(&out)["outputs"]["indicator_only"], true);
}

#[test]
fn e6_experiment_matches_prediction() {
    let out = run(&["e6-experiment", "--field", "2", "1"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["outputs"]["matches_prediction"], true);
    assert_eq!(r["outputs"]["sweep"]["orientations"].as_array().unwrap().len(), 32);
    assert_eq!(code(&run(&["e6-experiment", "--kind", "e7"])), 2);
}

#[test]
fn h0_of_filtration() {
    let out = run(&["h0", s(&sample("filtration.json"))]);
    assert_eq!(code(&out), 0);
    let dims = &report(&out)["outputs"]["representation"]["dims"];
    assert_eq!(dims["t0"], 3);
    assert_eq!(dims["t1"], 3);
    assert_eq!(dims["t2"], 1);
}

#[test]
fn oracle_and_decompose() {
    let out = run(&["oracle", s(&sample("d4_inward_f2.json"))]);
    assert_eq!(code(&out), 1);
    assert_eq!(report(&out)["outputs"]["definitive"], true);
    let out = run(&["oracle", s(&sample("indicator_a3.json"))]);
    assert_eq!(code(&out), 0);
    let out = run(&["decompose", s(&sample("d4_inward_f2.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["outputs"]["summands"], 1);
}

#[test]
fn bad_input_exits_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, "{\"field\": {\"p\": 2},\n \"shape\": [}").unwrap();
    let out = run(&["check", s(&f)]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&run(&["check", s(&missing)])), 2);
}
