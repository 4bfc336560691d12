use std::process::{Command, Output};

use hypersat::io::parse_edge_list;
use hypersat::saturation::{is_saturated, SaturationReport};
use hypersat::Tree;

fn hypersat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypersat")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_export_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("star.txt");
    let out = hypersat(&["construct", "--tree", "star:3", "--n", "4", "--out", edges.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["schema"], 1);

    let out = hypersat(&["verify", "--graph", edges.to_str().unwrap(), "--tree", "star:3"]);
    assert_eq!(out.status.code(), Some(0));
    let mut v = json(&out);
    v.as_object_mut().unwrap().remove("schema");
    let from_cli: SaturationReport = serde_json::from_value(v).unwrap();

    let g = parse_edge_list(&std::fs::read_to_string(&edges).unwrap()).unwrap();
    let t: Tree = "star:3".parse().unwrap();
    assert_eq!(from_cli, is_saturated(&g, &t).unwrap());
    assert_eq!(from_cli.edges, 12);
}

#[test]
fn dot_and_json_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let out = hypersat(&["construct", "--tree", "path:5", "--n", "3", "--out", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph \"path:5\" {"));
    assert_eq!(text.matches(" -- ").count(), 6);

    let rep = dir.path().join("r.json");
    let out = hypersat(&["construct", "--tree", "path:5", "--n", "3", "--out", rep.to_str().unwrap()]);
    assert_eq!(std::fs::read(&rep).unwrap(), out.stdout);
}

#[test]
fn verify_flags_unsaturated_graph() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    std::fs::write(&g, "dim=2\n00 01\n").unwrap();
    let out = hypersat(&["verify", "--graph", g.to_str().unwrap(), "--tree", "path:2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["saturated"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(hypersat(&["construct", "--tree", "bogus", "--n", "3"]).status.code(), Some(2));
    assert_eq!(hypersat(&["construct", "--tree", "star:3"]).status.code(), Some(2));
    assert_eq!(hypersat(&["construct", "--tree", "star:3", "--n", "3", "--method", "path"]).status.code(), Some(2));
    assert_eq!(hypersat(&["codes", "--kind", "hamming", "--n", "6"]).status.code(), Some(2));
    assert_eq!(hypersat(&["verify", "--graph", "/nonexistent/g.txt", "--tree", "star:3"]).status.code(), Some(2));
    // hypothesis not met but the graph is still built
    let out = hypersat(&["construct", "--tree", "genstar:3x2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["hypotheses_met"], false);
    // hypothesis failure with no graph
    assert_eq!(hypersat(&["construct", "--tree", "vgs:k=3,m=2,deg=2,2/2,2/2,2", "--n", "9", "--method", "vgs"]).status.code(), Some(1));
}

#[test]
fn satnum_example() {
    let out = hypersat(&["satnum", "--tree", "path:5", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["lower"], "12/5");
    assert_eq!(v["upper"], 6);
    assert_eq!(v["exact"], 6);
}

#[test]
fn hamming_listing() {
    let out = hypersat(&["codes", "--kind", "hamming", "--n", "7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.iter().all(|l| l.len() == 7));
    let out = hypersat(&["codes", "--kind", "hamming", "--n", "7", "--json"]);
    assert_eq!(json(&out)["report"]["pass"], true);
}

#[test]
fn pj_and_table() {
    let v = json(&hypersat(&["pj", "--j", "2", "--k", "2"]));
    assert_eq!(v["value"], 1);
    let v = json(&hypersat(&["pj", "--j", "3", "--k", "3", "--conjecture"]));
    assert_eq!(v["agrees"], false);
    let v = json(&hypersat(&["table", "--family", "caterpillars", "--range", "2..3", "--n", "3"]));
    assert_eq!(v["rows"].as_array().unwrap().len() + v["skipped"].as_array().unwrap().len(), 3);
    assert_eq!(hypersat(&["table", "--family", "paths", "--range", "5..2", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["construct", "--tree", "cat:3,2", "--n", "7", "--verify"][..],
        &["table", "--family", "paths", "--range", "2..6", "--n", "3", "--format", "text"][..],
    ] {
        let a = hypersat(args);
        let b = hypersat(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
