//! End-to-end acceptance checks, one test per criterion. Each prints a
//! single PASS/FAIL line before asserting.

use std::process::Command;

use hypersat::bounds::{conjecture_pj, exact_sat, lower_bound, pj_qk, rotated_paths, paths_disjoint_from_hub};
use hypersat::codes::{hamming_code, verify_pds, weichsel_pds};
use hypersat::constructions::{
    construct, disjoint_subcube, doublestar_construction, path_construction, prefix_deleted_set,
    star_construction, Method, Rational,
};
use hypersat::cube::full_cube;
use hypersat::matching::extract_regular;
use hypersat::saturation::{endpoints, is_saturated, EndpointRule};
use hypersat::tree::{build_caterpillar, build_path, build_star};

fn report(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {id:>2} PASS  {name}");
    } else {
        println!("criterion {id:>2} FAIL  {name}: {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "criterion {id} ({name}) failed: {failures:?}");
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

/// Longest path in `Q_k` minus `deleted`, by plain DFS from every vertex.
fn brute_longest_path(k: u32, deleted: &[u32]) -> u32 {
    fn go(k: u32, v: u32, seen: &mut Vec<bool>) -> u32 {
        let mut best = 0;
        for d in 0..k {
            let w = v ^ (1 << d);
            if !seen[w as usize] {
                seen[w as usize] = true;
                best = best.max(1 + go(k, w, seen));
                seen[w as usize] = false;
            }
        }
        best
    }
    let mut best = 0;
    for s in 0..1u32 << k {
        if deleted.contains(&s) {
            continue;
        }
        let mut seen = vec![false; 1 << k];
        for &c in deleted {
            seen[c as usize] = true;
        }
        seen[s as usize] = true;
        best = best.max(go(k, s, &mut seen));
    }
    best
}

#[test]
fn criterion_01_hamming_code_q7() {
    let mut f = Vec::new();
    let code = hamming_code(3).unwrap();
    check(&mut f, code.len() == 16, format!("{} codewords", code.len()));
    let members = code.members();
    let mut min = u32::MAX;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            min = min.min((a ^ b).count_ones());
        }
    }
    check(&mut f, min == 3, format!("minimum distance {min}"));
    for v in 0..128u32 {
        if code.contains(v) {
            continue;
        }
        let hits = (0..7).filter(|d| code.contains(v ^ (1 << d))).count();
        check(&mut f, hits == 1, format!("{v:07b} dominated {hits} times"));
    }
    report(1, "Hamming code of length 7", &f);
}

#[test]
fn criterion_02_weichsel_sets() {
    let mut f = Vec::new();
    for (n, s) in [(3, 2), (4, 2), (5, 2), (7, 3), (10, 3)] {
        let set = weichsel_pds(n, s).unwrap();
        let r = verify_pds(&set, &full_cube(n).unwrap()).unwrap();
        let cut = n - ((1 << s) - 1);
        let expected = (1usize << (n - cut)) / (n - cut + 1) as usize;
        check(&mut f, r.pass, format!("({n},{s}) not a perfect dominating set"));
        check(&mut f, r.components == expected, format!("({n},{s}) has {} components, want {expected}", r.components));
    }
    report(2, "perfect dominating sets of subcubes", &f);
}

#[test]
fn criterion_03_regular_extraction() {
    let mut f = Vec::new();
    for k in 1..=5 {
        let q = full_cube(k).unwrap();
        for r in 0..=k {
            let g = extract_regular(&q, r).unwrap();
            let ok = (0..q.order() as u32).all(|v| g.degree(v) == r)
                && g.edges().iter().all(|&e| q.has_edge(e));
            check(&mut f, ok, format!("Q_{k}, r = {r}"));
        }
    }
    report(3, "r-regular subgraphs of Q_k", &f);
}

#[test]
fn criterion_04_star() {
    let mut f = Vec::new();
    let c = star_construction(3, 3).unwrap();
    check(&mut f, c.graph.edge_count() == 6, format!("{} edges", c.graph.edge_count()));
    let formula = (Rational::from_integer(1) + Rational::new(2, 4)) * Rational::from_integer(4);
    check(&mut f, formula == Rational::from_integer(6), "closed form is not 6");
    let r = is_saturated(&c.graph, &build_star(3).unwrap()).unwrap();
    check(&mut f, r.saturated, "not saturated");
    report(4, "star S_3 in Q_3", &f);
}

#[test]
fn criterion_05_paths() {
    let mut f = Vec::new();
    let p5 = build_path(5).unwrap();
    let c = path_construction(5, 3).unwrap();
    check(&mut f, c.graph.edge_count() == 6, format!("P_5: {} edges", c.graph.edge_count()));
    check(&mut f, is_saturated(&c.graph, &p5).unwrap().saturated, "P_5 graph not saturated");
    let ends = endpoints(&c.graph, &p5, EndpointRule::Pendant).unwrap();
    let odd_missing: Vec<u32> = (0..8u32).filter(|v| v.count_ones() % 2 == 1 && !ends.contains(v)).collect();
    check(&mut f, odd_missing.is_empty(), format!("odd non-endpoints {odd_missing:?}"));
    let p6 = build_path(6).unwrap();
    let c = path_construction(6, 4).unwrap();
    check(&mut f, c.graph.edge_count() == 16, format!("P_6: {} edges", c.graph.edge_count()));
    check(&mut f, c.report.formula_matches == Some(true), "P_6 count differs from the even formula");
    check(&mut f, is_saturated(&c.graph, &p6).unwrap().saturated, "P_6 graph not saturated");
    report(5, "paths P_5 in Q_3 and P_6 in Q_4", &f);
}

#[test]
fn criterion_06_longest_path_after_deletion() {
    let mut f = Vec::new();
    for k in 2..=4u32 {
        for j in 1..=1u32 << (k - 1) {
            let c = prefix_deleted_set(k, j).unwrap();
            check(&mut f, c.len() == j as usize, format!("k={k} j={j}: |C| = {}", c.len()));
            let got = brute_longest_path(k, &c);
            let want = (1 << k) - 2 * j;
            check(&mut f, got == want, format!("k={k} j={j}: longest {got}, want {want}"));
        }
    }
    report(6, "longest path after deleting the prefix set", &f);
}

#[test]
fn criterion_07_disjoint_subcubes() {
    let mut f = Vec::new();
    for (t, want) in [(build_star(3).unwrap(), 8), (build_path(3).unwrap(), 4)] {
        let c = disjoint_subcube(&t, 3).unwrap();
        let edges = c.graph.edge_count();
        check(&mut f, edges == want, format!("{}: {edges} edges", t.literal()));
        check(&mut f, edges == u64::from(c.report.base_dim) << 2, format!("{}: not k * 2^(n-1)", t.literal()));
        check(&mut f, is_saturated(&c.graph, &t).unwrap().saturated, format!("{} not saturated", t.literal()));
    }
    report(7, "disjoint subcubes", &f);
}

#[test]
fn criterion_08_sandwich() {
    let mut f = Vec::new();
    let trees = [
        build_path(2).unwrap(),
        build_path(3).unwrap(),
        build_path(4).unwrap(),
        build_star(2).unwrap(),
        build_star(3).unwrap(),
        build_caterpillar(&[2, 2]).unwrap(),
    ];
    for t in &trees {
        let lower = lower_bound(t, 3).unwrap();
        let exact = exact_sat(t, 3).unwrap();
        let mut best: Option<u64> = None;
        for m in Method::ALL.into_iter().filter(|&m| m != Method::Auto) {
            let Ok(c) = construct(t, 3, m) else { continue };
            if is_saturated(&c.graph, t).unwrap().saturated {
                best = Some(best.map_or(c.report.edges, |b| b.min(c.report.edges)));
            }
        }
        let name = t.literal();
        check(&mut f, lower <= Rational::from_integer(exact as i128), format!("{name}: lower above exact {exact}"));
        match best {
            Some(b) => check(&mut f, exact <= b, format!("{name}: exact {exact} above construction {b}")),
            None => f.push(format!("{name}: no saturated construction")),
        }
    }
    report(8, "lower bound <= exact <= construction at n = 3", &f);
}

#[test]
fn criterion_09_doublestar() {
    let mut f = Vec::new();
    let c = doublestar_construction(3, 2, 7).unwrap();
    let edges = c.graph.edge_count();
    check(&mut f, edges == 112, format!("{edges} edges"));
    check(&mut f, edges <= 2 << 6, "above 2 * 2^6");
    let r = is_saturated(&c.graph, &build_caterpillar(&[3, 2]).unwrap()).unwrap();
    check(&mut f, r.saturated, format!("{} failing non-edges", r.failing_edges.len()));
    report(9, "double star S_3x2 in Q_7", &f);
}

#[test]
fn criterion_10_pj_and_conjecture() {
    let mut f = Vec::new();
    for k in 1..=4u32 {
        for j in 1..=k {
            let p = pj_qk(j, k).unwrap();
            check(&mut f, p + 1 >= k, format!("P_{j}(Q_{k}) = {p}"));
        }
        let rot = rotated_paths(k).unwrap();
        check(&mut f, paths_disjoint_from_hub(&rot), format!("rotated paths in Q_{k} overlap"));
    }
    let c = conjecture_pj(2, 2).unwrap();
    check(&mut f, c.agrees == Some(true), "(2,2) should agree");
    let c = conjecture_pj(3, 3).unwrap();
    check(&mut f, c.predicted == 1, format!("(3,3) predicts {}", c.predicted));
    check(&mut f, c.agrees == Some(false) && c.below_guarantee, "(3,3) discrepancy not flagged");
    let c = conjecture_pj(1, 3).unwrap();
    check(&mut f, c.actual == Some(7), format!("P_1(Q_3) = {:?}", c.actual));
    report(10, "P_j(Q_k) and the binomial-sum prediction", &f);
}

#[test]
fn criterion_11_cubical_dimension_of_paths() {
    let mut f = Vec::new();
    for k in 2..=16usize {
        let cd = build_path(k).unwrap().cubical_dimension().unwrap();
        let want = k.ilog2() + 1;
        check(&mut f, cd == want, format!("cd(P_{k}) = {cd}, want {want}"));
    }
    report(11, "cubical dimension of paths", &f);
}

fn cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO"))
        .args(["run", "-q", "-p", "hypersat-cli", "--"])
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("cargo run");
    (out.status.code(), out.stdout)
}

#[test]
fn criterion_12_cli_determinism() {
    let mut f = Vec::new();
    let commands: [&[&str]; 7] = [
        &["construct", "--tree", "star:3", "--n", "4", "--verify"],
        &["construct", "--tree", "path:6", "--n", "5", "--method", "path"],
        &["satnum", "--tree", "path:3", "--n", "3"],
        &["codes", "--kind", "hamming", "--n", "7"],
        &["codes", "--kind", "weichsel", "--n", "5", "--s", "2", "--json"],
        &["pj", "--j", "3", "--k", "3", "--conjecture"],
        &["table", "--family", "stars", "--range", "2..4", "--n", "4", "--format", "text"],
    ];
    for args in commands {
        let (c1, o1) = cli(args);
        let (c2, o2) = cli(args);
        let label = args.join(" ");
        check(&mut f, c1 == Some(0), format!("`{label}` exited {c1:?}"));
        check(&mut f, c1 == c2 && o1 == o2, format!("`{label}` differs between runs"));
        check(&mut f, !o1.is_empty(), format!("`{label}` printed nothing"));
    }
    report(12, "CLI output is byte-identical across runs", &f);
}
