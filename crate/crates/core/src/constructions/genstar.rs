//! Generalized stars `GS_{k,m}` from a full half-cube and a sparse half.

use super::report::{pow2, BoundReport, Construction, LiftKind, Rational};
use crate::bounds::pj_qk;
use crate::cube::{lift_to_qn, CubeSubgraph, Edge};
use crate::error::{Error, Result};
use crate::saturation::greedy_saturate;
use crate::tree::build_genstar;

fn gray(i: u32) -> u32 {
    i ^ (i >> 1)
}

/// Longest path from `root` in the graph on `0..2^dim` given by `adj`
/// (neighbour bitmasks over vertex indices).
fn longest_from(adj: &[u32], root: usize) -> u32 {
    fn go(adj: &[u32], v: usize, seen: u32) -> u32 {
        let mut best = 0;
        let mut m = adj[v] & !seen;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            best = best.max(1 + go(adj, w, seen | 1 << w));
        }
        best
    }
    go(adj, root, 1 << root)
}

/// Edges of one `j`-cube (local coordinates) forming a Gray path plus
/// greedily added edges, so that the longest path from the root `p_{f-1}`
/// is exactly `f - 1`. Returns the local edges and the root.
fn rooted_path_block(j: u32, f: u32) -> (Vec<(u32, u32)>, u32) {
    let size = 1u32 << j;
    let root = gray(f - 1);
    let mut adj = vec![0u32; size as usize];
    let mut edges = Vec::new();
    let add = |adj: &mut Vec<u32>, a: u32, b: u32| {
        adj[a as usize] |= 1 << b;
        adj[b as usize] |= 1 << a;
    };
    for i in 1..size {
        let (a, b) = (gray(i - 1), gray(i));
        add(&mut adj, a, b);
        edges.push((a.min(b), a.max(b)));
    }
    for a in 0..size {
        for d in 0..j {
            let b = a ^ (1 << d);
            if a > b || adj[a as usize] >> b & 1 == 1 {
                continue;
            }
            let mut trial = adj.clone();
            add(&mut trial, a, b);
            if f == size || longest_from(&trial, root as usize) <= f - 1 {
                adj = trial;
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    (edges, root)
}

/// A `GS_{k,m}`-saturated subgraph of `Q_n`.
///
/// In `Q_k` the half `A` (top coordinate 0) is complete. The other half is
/// cut into `m'`-cubes on the low coordinates; their base points form a
/// cube that is cut into `j`-cubes, each carrying a Gray path with extra
/// edges that keep the longest path from its root at `f - 1`. Each root
/// gets its edge to `A`, and the remaining edges across the halves are
/// added greedily. Copies fill `Q_n`.
pub fn genstar_construction(k: u32, m: u32, n: u32) -> Result<Construction> {
    if k < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!("need k >= 2 and m >= 2, got k = {k}, m = {m}")));
    }
    if n < k {
        return Err(Error::InvalidParameter(format!("GS_{{{k},{m}}} construction lives in Q_{k}; n = {n}")));
    }
    let mp = 31 - (m - 1).leading_zeros();
    let f = m - (1 << mp);
    let j = if f <= 1 { 0 } else { 32 - (f - 1).leading_zeros() };
    if k - 1 < mp + j {
        return Err(Error::Hypothesis(format!(
            "half-cube Q_{} too small for m' = {mp} and j = {j}",
            k - 1
        )));
    }
    if k > 10 {
        return Err(Error::BudgetExceeded(format!("greedy completion in Q_{k}")));
    }
    let tree = build_genstar(k as usize, m as usize)?;
    let hyp = match pj_qk(k - 1, k - 1) {
        Ok(p) => Some((p, m <= p)),
        Err(Error::BudgetExceeded(_)) => None,
        Err(e) => return Err(e),
    };

    let top = 1u32 << (k - 1);
    let mut h = CubeSubgraph::empty(k)?;
    for x in 0..top {
        for d in 0..k - 1 {
            let y = x ^ (1 << d);
            if x < y {
                h.add_edge(Edge::new(x, y)?)?;
            }
            if d < mp && x < y {
                h.add_edge(Edge::new(top | x, top | y)?)?;
            }
        }
    }
    let (block, root) = rooted_path_block(j, f.max(1));
    let blocks = 1u32 << (k - 1 - mp - j);
    for c in 0..blocks {
        let base = top | c << (mp + j);
        for &(a, b) in &block {
            h.add_edge(Edge::new(base | a << mp, base | b << mp)?)?;
        }
        let r = base | root << mp;
        h.add_edge(Edge::new(r ^ top, r)?)?;
    }
    let across = |e: Edge| e.lo() ^ e.hi() == top;
    let h = greedy_saturate(&h, &tree, Some(&across))?;

    let graph = lift_to_qn(&h, &h, n)?;
    let bound = (Rational::from_integer((k + 1 + mp) as i128) + Rational::from_integer(j as i128) / pow2(mp))
        * pow2(n - 2);
    let mut report = BoundReport::new(tree.literal(), "genstar", n, k, &graph)
        .with_bound(bound)
        .note(format!("m' = {mp}, f = {f}, j = {j}"));
    match hyp {
        Some((p, true)) => report = report.note(format!("m <= P_{}(Q_{}) = {p}", k - 1, k - 1)),
        Some((p, false)) => {
            report.hypotheses_met = false;
            report = report.note(format!("hypothesis m <= P_{}(Q_{}) = {p} fails", k - 1, k - 1));
        }
        None => report = report.note(format!("P_{}(Q_{}) not searched", k - 1, k - 1)),
    }
    report.lift = LiftKind::Copies;
    Ok(Construction { base: h, graph, report })
}
