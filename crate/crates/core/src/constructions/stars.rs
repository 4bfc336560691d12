//! Stars and short caterpillars from Hamming codes and their translates.

use super::report::{pow2, BoundReport, Construction, LiftKind, Rational};
use super::lift_alternating;
use crate::codes::{hamming_code, weichsel_pds};
use crate::cube::{full_cube, lift_to_qn, CubeAutomorphism, CubeSubgraph};
use crate::error::{Error, Result};
use crate::matching::raise_to_degree;
use crate::tree::{build_caterpillar, build_star};

fn int(x: i128) -> Rational {
    Rational::from_integer(x)
}

/// Smallest `2^t - 1` strictly above `k`, with `t`.
pub(crate) fn code_length_above(k: usize) -> (u32, u32) {
    let mut t = 1;
    while (1usize << t) - 1 <= k {
        t += 1;
    }
    ((1 << t) - 1, t)
}

/// An `S_k`-saturated subgraph: the edges inside a perfect dominating set
/// of subcubes and inside its complement.
pub fn star_construction(k: u32, n: u32) -> Result<Construction> {
    if !(2..=20).contains(&k) {
        return Err(Error::InvalidParameter(format!("star construction needs 2 <= k <= 20, got {k}")));
    }
    if n < k {
        return Err(Error::InvalidParameter(format!("S_{k} needs n >= {k}")));
    }
    let t = 31 - (k + 1).leading_zeros();
    let m = k - ((1 << t) - 1);
    let set = weichsel_pds(k, t)?;
    let inside = set.indicator();
    let q = full_cube(k)?;
    let h = CubeSubgraph::from_edges(
        k,
        q.edges()
            .into_iter()
            .filter(|e| inside[e.lo() as usize] == inside[e.hi() as usize]),
    )?;
    // Complement vertices have degree k-1 and are the endpoints; a unit
    // move inside the code block sends each code vertex off the set.
    let shift = CubeAutomorphism::translation(k, 1 << (k - 1))?;
    let (graph, lift) = lift_alternating(&h, n, &shift, true)?;
    let tree = build_star(k as usize)?;
    let exact = (int(k as i128 - 2) + int(2) / int((k - m + 1) as i128)) * pow2(n - 1);
    let mut report = BoundReport::new(tree.literal(), "star", n, k, &graph)
        .with_formula(exact)
        .with_bound(exact)
        .note(format!("dominating set of {} copies of Q_{m}", set.len() >> m));
    report.lift = lift;
    Ok(Construction { base: h, graph, report })
}

/// Every edge at one of `codes`, then the remaining vertices raised to
/// degree `target` by a b-matching.
fn codes_then_raise(dim: u32, codes: &[Vec<u32>], target: u32) -> Result<CubeSubgraph> {
    let q = full_cube(dim)?;
    let mut in_code = vec![false; q.order()];
    for c in codes {
        for &v in c {
            in_code[v as usize] = true;
        }
    }
    let mut h = CubeSubgraph::empty(dim)?;
    let mut candidates = Vec::new();
    for e in q.edges() {
        if in_code[e.lo() as usize] || in_code[e.hi() as usize] {
            h.add_edge(e)?;
        } else {
            candidates.push(e);
        }
    }
    let targets: Vec<u32> = (0..q.order() as u32).filter(|&v| !in_code[v as usize]).collect();
    raise_to_degree(&h, &candidates, &targets, target, &[])
}

fn hamming_in(kappa: u32) -> Result<Vec<u32>> {
    let i = 32 - kappa.leading_zeros();
    Ok(hamming_code(i)?.members().to_vec())
}

fn check_kappa(kappa: u32, n: u32) -> Result<()> {
    if kappa > 15 {
        return Err(Error::BudgetExceeded(format!("needs Q_{kappa}, above the Q_15 limit")));
    }
    if n < kappa {
        return Err(Error::InvalidParameter(format!("construction lives in Q_{kappa}; n = {n} is too small")));
    }
    Ok(())
}

/// An `S_{k×r}`-saturated subgraph for `k >= r >= 2`: all edges at a
/// Hamming code in `Q_κ`, the rest raised to degree `r - 1`, copied.
pub fn doublestar_construction(k: u32, r: u32, n: u32) -> Result<Construction> {
    if r < 2 || k < r {
        return Err(Error::InvalidParameter(format!("need k >= r >= 2, got k = {k}, r = {r}")));
    }
    let (kappa, _) = code_length_above(k as usize);
    check_kappa(kappa, n)?;
    let h = codes_then_raise(kappa, &[hamming_in(kappa)?], r - 1)?;
    let graph = lift_to_qn(&h, &h, n)?;
    let tree = build_caterpillar(&[k as usize, r as usize])?;
    let kk = int(kappa as i128);
    let per_cube = kk * pow2(kappa) / (kk + 1) + int(r as i128 - 2) * kk * pow2(kappa - 1) / (kk + 1);
    let mut report = BoundReport::new(tree.literal(), "doublestar", n, kappa, &graph)
        .with_formula(per_cube * pow2(n - kappa))
        .with_bound(int(r as i128) * pow2(n - 1));
    report.lift = LiftKind::Copies;
    Ok(Construction { base: h, graph, report })
}

/// Caterpillars with three or four central vertices, from two or three
/// translated Hamming codes.
///
/// With the minimum at an inner position (or with three central
/// vertices) the codes are `C` and `C + e_1`; with four central vertices
/// and the minimum only at an end, `C + e_2` joins them. The remaining
/// vertices are raised to degree `r - 1`.
pub fn multistar_construction(degrees: &[u32], n: u32) -> Result<Construction> {
    let m = degrees.len();
    if !(3..=4).contains(&m) {
        return Err(Error::InvalidParameter(format!("multistar needs 3 or 4 central vertices, got {m}")));
    }
    let floor = if m == 3 { 2 } else { 3 };
    if let Some(d) = degrees.iter().find(|&&d| d < floor) {
        return Err(Error::Hypothesis(format!("central degree {d} below {floor}")));
    }
    let r = *degrees.iter().min().unwrap();
    let kmax = *degrees.iter().max().unwrap();
    let (kappa, _) = code_length_above(kmax as usize);
    check_kappa(kappa, n)?;
    let inner_min = degrees[1..m - 1].contains(&r);
    let three_codes = m == 4 && !inner_min;
    let c = hamming_in(kappa)?;
    let top = 1u32 << (kappa - 1);
    let mut codes = vec![c.clone(), c.iter().map(|&x| x ^ top).collect()];
    if three_codes {
        codes.push(c.iter().map(|&x| x ^ (top >> 1)).collect());
    }
    let forced = codes.len() as u32;
    if r < forced + 1 {
        return Err(Error::Infeasible(format!(
            "vertices off the codes already have degree {forced}; r - 1 = {} is too small",
            r - 1
        )));
    }
    let h = codes_then_raise(kappa, &codes, r - 1)?;
    let graph = lift_to_qn(&h, &h, n)?;
    let tree = build_caterpillar(&degrees.iter().map(|&d| d as usize).collect::<Vec<_>>())?;
    let kk = int(kappa as i128);
    let rr = int(r as i128);
    let mut report = BoundReport::new(tree.literal(), "multistar", n, kappa, &graph);
    if m == 4 {
        let per_cube = if three_codes {
            (int(3) * kk - int(2)) * pow2(kappa) / (kk + 1)
                + (rr - int(4)) * (kk * pow2(kappa - 1) - pow2(kappa + 1)) / (kk + 1)
        } else {
            (int(2) * kk - int(1)) * pow2(kappa) / (kk + 1)
                + (rr - int(3)) * (kk * pow2(kappa - 1) - pow2(kappa)) / (kk + 1)
        };
        report = report.with_formula(per_cube * pow2(n - kappa));
    }
    report = report
        .with_bound(rr * pow2(n - 1))
        .note(format!("{forced} translated codes in Q_{kappa}"));
    report.lift = LiftKind::Copies;
    Ok(Construction { base: h, graph, report })
}
