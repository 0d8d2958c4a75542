use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use algshift_cli::{random_pair, ComplexDocument};
use algshift_core::complex::SimplicialComplex;
use algshift_core::face::Face;
use proptest::prelude::*;
use serde_json::{json, Value};

fn algshift(args: &[&str]) -> Output { Command::new(env!("CARGO_BIN_EXE_algshift")).args(args).output().unwrap() }

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
  let path = dir.join(name);
  std::fs::write(&path, text).unwrap();
  path
}

fn json_lines(out: &Output) -> Vec<Value> {
  String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn point_edge_files(dir: &Path) -> (String, String) {
  let k = write(dir, "k.json", r#"{"n":3,"facets":[[1],[2,3]]}"#);
  let l = write(dir, "l.json", r#"{"n":3,"facets":[[1],[2]]}"#);
  (k.to_string_lossy().into_owned(), l.to_string_lossy().into_owned())
}

#[test]
fn shift_documents() {
  let dir = tempfile::tempdir().unwrap();
  for (input, facets) in [
    (r#"{"n":3,"facets":[[1],[2,3]]}"#, json!([[1, 2], [3]])),
    (r#"{"n":3,"facets":[]}"#, json!([])),
    (r#"{"n":3,"facets":[[]]}"#, json!([[]])),
  ] {
    let path = write(dir.path(), "c.json", input);
    let out = algshift(&["shift", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["n"], 3);
    assert_eq!(v["facets"], facets, "{input}");
    assert_eq!(v["retries"], 0);
  }
}

#[test]
fn betti_tables() {
  let dir = tempfile::tempdir().unwrap();
  let (k, l) = point_edge_files(dir.path());
  assert_eq!(json_lines(&algshift(&["betti", &k]))[0], json!({"0": 1}));
  assert_eq!(json_lines(&algshift(&["betti", &k, &l]))[0], json!({}));
  let dk = write(dir.path(), "dk.json", r#"{"n":3,"facets":[[1,2],[3]]}"#);
  let out = algshift(&["betti", dk.to_str().unwrap(), &l]);
  assert_eq!(json_lines(&out)[0], json!({"0": 1, "1": 1}));
  let out = algshift(&["betti", &l, &k]);
  assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_point_edge_pair() {
  let dir = tempfile::tempdir().unwrap();
  let (k, l) = point_edge_files(dir.path());
  let out = algshift(&["verify", &k, &l]);
  assert_eq!(out.status.code(), Some(0));
  let v = &json_lines(&out)[0];
  assert_eq!(v["status"], "PASS");
  assert_eq!(v["betti"]["kl"], json!({}));
  assert_eq!(v["betti"]["deltaKL"], json!({"0": 1, "1": 1}));
  for key in ["gamma", "imKer", "sigmaTop", "sigmaBottom", "new1", "new2", "main"] {
    assert_eq!(v["lemmas"][key], true, "{key}");
  }
  assert_eq!(v["p"], 2305843009213693951u64);
}

#[test]
fn input_errors_exit_four() {
  let dir = tempfile::tempdir().unwrap();
  let bad = write(dir.path(), "bad.json", r#"{"n":3,"facets":"#);
  assert_eq!(algshift(&["shift", bad.to_str().unwrap()]).status.code(), Some(4));
  assert_eq!(algshift(&["shift", "/nonexistent/file.json"]).status.code(), Some(4));
  let (k, _) = point_edge_files(dir.path());
  assert_eq!(algshift(&["shift", &k, "--prime", "9"]).status.code(), Some(4));
  assert_eq!(algshift(&["verify"]).status.code(), Some(4));
  assert_eq!(algshift(&["verify", "--random", "--n", "20"]).status.code(), Some(4));
  assert_eq!(algshift(&["verify", "--random", "--trials", "0"]).status.code(), Some(4));
  assert_eq!(algshift(&["--help"]).status.code(), Some(0));
}

#[test]
fn genericity_exhaustion_exits_three() {
  let out = algshift(&["verify", "--random", "--n", "4", "--dim", "3", "--facets", "4", "--prime", "2", "--max-retries", "0", "--trials", "4"]);
  assert_eq!(out.status.code(), Some(3));
  assert!(json_lines(&out).iter().any(|v| v["status"] == "GENERICITY_EXHAUSTED"));
}

#[test]
fn random_runs_are_deterministic() {
  let dir = tempfile::tempdir().unwrap();
  let args = ["verify", "--random", "--trials", "12", "--n", "7", "--dim", "3", "--facets", "5", "--seed", "41"];
  let a = algshift(&args);
  assert_eq!(a.status.code(), Some(0));
  let out = dir.path().join("reports.jsonl");
  let mut with_out = args.to_vec();
  with_out.extend(["--out", out.to_str().unwrap()]);
  assert_eq!(algshift(&with_out).status.code(), Some(0));
  assert_eq!(std::fs::read(&out).unwrap(), a.stdout);
  let lines = json_lines(&a);
  assert_eq!(lines.len(), 12);
  for (t, v) in lines.iter().enumerate() {
    assert_eq!(v["trial"], t);
    assert_eq!(v["pass"], true);
  }
}

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
  let facet = proptest::collection::btree_set(1..=7usize, 0..=4);
  (proptest::collection::vec(facet, 0..5)).prop_map(|fs| SimplicialComplex::from_facets(7, fs.into_iter().map(|f| Face::new(f).unwrap())).unwrap())
}

proptest! {
  #[test]
  fn documents_round_trip(c in complex_strategy()) {
    let doc = ComplexDocument::from_complex(&c);
    let text = serde_json::to_string(&doc).unwrap();
    let back = ComplexDocument::parse(&text).unwrap().to_complex().unwrap();
    prop_assert_eq!(back, c);
  }

  #[test]
  fn random_pairs_are_nested_complexes(n in 1usize..=9, dim in 0usize..=4, facets in 0usize..=8, seed in any::<u64>(), void in any::<bool>()) {
    let p = random_pair(n, dim, facets, seed, void).unwrap();
    prop_assert!(p.l().is_subcomplex_of(p.k()));
    for c in [p.k(), p.l()] {
      prop_assert!(SimplicialComplex::from_faces(n, c.faces()).is_ok());
      prop_assert!(c.dim().unwrap_or(-1) <= dim as i32);
    }
    prop_assert_eq!(random_pair(n, dim, facets, seed, void).unwrap(), p);
  }
}
