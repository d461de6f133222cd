use std::io::Write;
use std::process::{Command, Output, Stdio};

use posettop::io::{parse_complex, parse_document, parse_poset, parse_semigroup, poset_json, Document};
use posettop_core::constructions::boolean;
use posettop_core::semigroup::lambda_d;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_posettop"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn boolean_pipeline_is_cm() {
    let b3 = run(&["family", "boolean", "--n", "3"]);
    assert_eq!(b3.status.code(), Some(0));
    let cm = run_stdin(&["cm", "--field", "q", "-"], &b3.stdout);
    assert_eq!(cm.status.code(), Some(0));
    assert!(stdout(&cm).contains("verdict: CM over Q"));
}

#[test]
fn composite_field_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "b2.json", &poset_json(&boolean(2).unwrap()));
    let o = run(&["cm", "--field", "gf:4", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("4 is not prime"));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json").display().to_string();
    assert_eq!(run(&["homology", &missing]).status.code(), Some(2));
    let junk = write_temp(&dir, "junk.json", "{\"elements\": [");
    assert_eq!(run(&["cm", &junk]).status.code(), Some(2));
    let cyclic = write_temp(&dir, "cyclic.json", r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#);
    assert_eq!(run(&["cm", &cyclic]).status.code(), Some(2));
    assert_eq!(run(&["family", "boolean"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn non_strict_segre_fails_cm_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_temp(&dir, "a.json", &stdout(&run(&["family", "antichain", "--n", "2"])));
    let c = write_temp(&dir, "c.json", &stdout(&run(&["family", "chain", "--n", "2"])));
    let s = run(&["construct", "segre", &a, &c, "--g-values", "0,0"]);
    assert_eq!(s.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&s.stderr).contains("not strictly"));
    let o = run_stdin(&["cm", "-", "--format", "json"], &s.stdout);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], false);
}

#[test]
fn poset_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m2.json");
    let o = run(&["family", "minors", "--n", "2", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let p = parse_poset(&text).unwrap();
    assert_eq!(p.len(), 6);
    assert_eq!(poset_json(&p), text);
    let m2 = posettop_core::constructions::minors(2).unwrap().poset;
    assert!(p.is_isomorphic(&m2).unwrap());
}

#[test]
fn complex_and_semigroup_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let b = write_temp(&dir, "b3.json", &poset_json(&boolean(3).unwrap()));
    let o = run(&["complex", "type-select", &b, "--types", "2,3"]);
    let text = stdout(&o);
    let c = parse_complex(&text).unwrap();
    assert_eq!(posettop::io::complex_json(&c), text);
    assert_eq!(c.f_vector(), vec![1, 6, 6]);
    let h = run_stdin(&["homology", "-"], text.as_bytes());
    assert_eq!(stdout(&h).trim(), "H~_1 = Z");

    let l = run(&["semigroup", "lambda", "--d", "3"]);
    let s = parse_semigroup(&stdout(&l)).unwrap();
    assert_eq!(s, lambda_d(3).unwrap());
    assert!(matches!(parse_document(&stdout(&l)).unwrap(), Document::Semigroup(_)));
}

#[test]
fn rp2_homology_over_each_ring() {
    let dir = tempfile::tempdir().unwrap();
    let facets = r#"{"vertices":["1","2","3","4","5","6"],"facets":[
        ["1","2","3"],["1","3","4"],["1","4","5"],["1","5","6"],["1","6","2"],
        ["2","3","5"],["3","4","6"],["4","5","2"],["5","6","3"],["6","2","4"]]}"#;
    let p = write_temp(&dir, "rp2.json", facets);
    assert_eq!(stdout(&run(&["homology", &p])).trim(), "H~_1 = Z/2");
    assert_eq!(stdout(&run(&["homology", &p, "--field", "q"])).trim(), "0");
    let json: serde_json::Value = serde_json::from_slice(&run(&["homology", &p, "--field", "gf:2", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["dims"]["1"]["betti"], 1);
    assert_eq!(json["dims"]["2"]["betti"], 1);
    assert_eq!(run(&["cm", &p, "--field", "gf:2"]).status.code(), Some(1));
    assert_eq!(run(&["cm", &p, "--field", "z-spherical"]).status.code(), Some(1));
    assert_eq!(run(&["cm", &p, "--field", "q"]).status.code(), Some(0));
}

#[test]
fn enumerate_outputs() {
    assert_eq!(stdout(&run(&["enumerate", "derangements", "--n", "5"])).trim(), "44");
    assert_eq!(stdout(&run(&["enumerate", "nca-pairs", "--n", "3"])).trim(), "19");
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["enumerate", "falling-chains", "--n", "2", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["value"], 3);
    assert!(stdout(&run(&["enumerate", "flag-vector", "--n", "3"])).contains("sum alpha*beta = 19"));
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let o = run(&["verify-paper", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for k in 1..=8 {
        assert!(text.contains(&format!("criterion {k}: PASS")));
    }
    assert!(text.contains("H~_3 = H~_4 = Z^6"));
    let a = run(&["verify-paper", "--max-n", "4", "--format", "json", "--threads", "3"]);
    let b = run(&["verify-paper", "--max-n", "4", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
