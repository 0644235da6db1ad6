use std::process::{Command, Output};

use serde_json::Value;
use superstar::Weight;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superstar")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn star_example() {
    let v = json(&["star", "--family", "gl:2,1", "--weight", "0,0|0", "--map", "example71", "--alpha", "e1-e2"]);
    assert_eq!(v["result"]["literal"], "0,1|-1");
    let w: Weight = serde_json::from_value(v["result"]["weight"].clone()).unwrap();
    assert_eq!(w, Weight::from_ints(&[0, 1], &[-1]));
}

#[test]
fn star_word_and_linear_literal() {
    // the trivial map is the dot action: s·0 = -e1+e2 with ρ = (0,-1|1)
    let v = json(&["star", "--family", "gl:2,1", "--weight", "0,0|0", "--word", "0"]);
    assert_eq!(v["result"]["literal"], "-1,1|0");
    let v = json(&["star", "--family", "gl:2,1", "--weight", "e2-d1", "--word", "0,0"]);
    assert_eq!(v["result"]["literal"], "0,1|-1");
}

#[test]
fn queer_orbit_has_two_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("orbit.dot");
    let v = json(&["star-orbit", "--family", "q:2", "--weight", "3,-3", "--dot", dot.to_str().unwrap()]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(v["truncated"], false);
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("graph orbit"));
    assert!(text.contains("fillcolor"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["smallrank", "involution", "lemma8.1"] {
        let out = run(&["verify", suite, "--seed", "3", "--count", "20"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn verify_is_deterministic() {
    let a = json(&["verify", "thm7.3", "--seed", "11", "--count", "5"]);
    let b = json(&["verify", "thm7.3", "--seed", "11", "--count", "5"]);
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["star", "--family", "gl:2,1", "--weight", "0,x|0", "--word", "0"]), Some(1));
    assert_eq!(code(&["star", "--family", "gl:2", "--weight", "0|0", "--word", "0"]), Some(1));
    assert_eq!(code(&["nonsense"]), Some(1));
    assert_eq!(code(&["verify", "nope"]), Some(1));
    // ε2 + ρ is singular, so the type I generic poset refuses it
    assert_eq!(code(&["prim-poset", "--family", "gl:2,1", "--weight", "0,1|0", "--mode", "generic"]), Some(2));
    assert_eq!(code(&["star-orbit", "--family", "q:2", "--weight", "1/2,0", "--max-vertices", "0"]), Some(0));
    assert_eq!(code(&["borel", "--family", "gl:3,3", "--enumerate", "--cap", "3"]), Some(3));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn parse_errors_give_a_position() {
    let out = run(&["star", "--family", "gl:2,1", "--weight", "0,1|zz", "--word", "0"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("column 5"), "{err}");
}

#[test]
fn every_subcommand_emits_json() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["roots", "--family", "osp:3,2"],
        vec!["borel", "--family", "gl:2,1", "--enumerate"],
        vec!["odd-reflect", "--family", "gl:2,1", "--gamma", "e2-d1"],
        vec!["track", "--family", "gl:2,1", "--weight", "1,0|0", "--path", "e2-d1"],
        vec!["rho", "--family", "gl:2,1", "--odd-positive", "e1-d1,e2-d1"],
        vec!["typicality", "--family", "q:3", "--weight", "2,1,-2"],
        vec!["generic", "--family", "osp:3,2", "--weight", "40|17"],
        vec!["chamber", "--family", "gl:3,0", "--weight", "3,1,2"],
        vec!["kl", "--family", "gl:3,0"],
        vec!["prim-poset", "--family", "sl:2,1", "--weight", "0,0|0", "--mode", "small-rank"],
        vec!["prim-poset", "--family", "sl:2,1", "--weight", "0,0|0", "--mode", "star", "--maps", "trivial,anti"],
        vec!["prim-poset", "--family", "q:2", "--weight", "9,-4", "--mode", "generic", "--closure"],
        vec!["chars", "--family", "gl:2,1", "--weight", "5,2|1", "--op", "restriction"],
        vec!["chars", "--family", "q:2", "--weight", "3,-3", "--op", "penkov"],
        vec!["chars", "--family", "osp:3,2", "--weight", "1/2|3", "--op", "twisted"],
    ];
    for args in cases {
        let v = json(&args);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v, "{args:?}");
    }
}

#[test]
fn kl_table_is_keyed_by_words() {
    let v = json(&["kl", "--family", "gl:3,0"]);
    assert_eq!(v["size"], 6);
    assert_eq!(v["polynomials"]["s1s2s1"]["e"], "1");
    assert_eq!(v["left_cells"].as_array().unwrap().len(), 4);
    // W_λ of a half-integral weight is trivial
    let v = json(&["kl", "--family", "gl:2,0", "--weight", "1/2,0"]);
    assert_eq!(v["size"], 1);
}

#[test]
fn small_rank_extra_edge_in_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("p.dot");
    let v = json(&[
        "prim-poset", "--family", "sl:2,1", "--weight", "0,0|0", "--mode", "small-rank", "--dot", dot.to_str().unwrap(),
    ]);
    let rel = v["relation"].as_array().unwrap();
    assert!(rel.iter().any(|p| p[0] == "0,1|-1" && p[1] == "0,0|0"), "{rel:?}");
    assert!(std::fs::read_to_string(dot).unwrap().contains("digraph"));
}
