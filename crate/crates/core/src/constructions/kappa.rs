//! Caterpillars and very generalized stars from a perfect dominating set
//! of subcubes in `Q_κ`.

use super::report::{pow2, BoundReport, Construction, LiftKind, Rational};
use crate::bounds::pj_qk;
use crate::codes::weichsel_pds;
use crate::cube::{full_cube, lift_to_qn, CubeSubgraph};
use crate::error::{Error, Result};
use crate::matching::raise_to_degree;
use crate::tree::{build_caterpillar, build_vgs};

fn int(x: i128) -> Rational {
    Rational::from_integer(x)
}

/// Smallest `κ = a + 2^s - 1` with `2^s > kmax`, and that `s`.
fn kappa_for(a: u32, kmax: u32) -> Result<(u32, u32)> {
    let mut s = 1;
    while (1u32 << s) <= kmax {
        s += 1;
    }
    let kappa = a + (1 << s) - 1;
    if kappa > 15 {
        return Err(Error::BudgetExceeded(format!("needs Q_{kappa}, above the Q_15 limit")));
    }
    Ok((kappa, s))
}

/// All edges at a dominating set of `Q_a`'s in `Q_κ`, every low-direction
/// edge among the other vertices, then those raised to degree `r - 1`.
fn dominated_subcubes(kappa: u32, s: u32, r: u32) -> Result<CubeSubgraph> {
    let a = kappa - ((1 << s) - 1);
    if r < a + 2 {
        return Err(Error::Infeasible(format!(
            "vertices off the dominating set start at degree {}; r - 1 = {} is too small",
            a + 1,
            r.saturating_sub(1)
        )));
    }
    let set = weichsel_pds(kappa, s)?;
    let inside = set.indicator();
    let mut h = CubeSubgraph::empty(kappa)?;
    let mut candidates = Vec::new();
    let mut mandatory = Vec::new();
    for e in full_cube(kappa)?.edges() {
        if inside[e.lo() as usize] || inside[e.hi() as usize] {
            h.add_edge(e)?;
        } else if e.direction() < a {
            mandatory.push(e);
        } else {
            candidates.push(e);
        }
    }
    let targets: Vec<u32> = (0..1u32 << kappa).filter(|&v| !inside[v as usize]).collect();
    raise_to_degree(&h, &candidates, &targets, r - 1, &mandatory)
}

/// Direct edge count of [`dominated_subcubes`] in `Q_κ`.
fn dominated_count(kappa: u32, a: u32, r: u32) -> Rational {
    let (k, a, r) = (int(kappa as i128), int(a as i128), int(r as i128));
    let q = k - a + int(1);
    a * pow2(kappa - 1) / q + (k - a) * pow2(kappa) / q + (r - int(2)) * (q * pow2(kappa - 1) - pow2(kappa - 1)) / q
}

/// A caterpillar-saturated subgraph for `m = 2^a + b` central vertices,
/// `2 <= b <= 2^a`, with the lightest adjacent pair at a position `j`,
/// `b - 1 < j < 2^a`. Uses a dominating set of `Q_a`'s.
pub fn caterpillar_construction(degrees: &[u32], n: u32) -> Result<Construction> {
    let m = degrees.len() as u32;
    if m < 2 {
        return Err(Error::InvalidParameter("need at least two central vertices".into()));
    }
    let a = 31 - (m - 1).leading_zeros();
    let b = m - (1 << a);
    if !(2..=1 << a).contains(&b) {
        return Err(Error::Hypothesis(format!("m = {m} is not 2^a + b with 2 <= b <= 2^a")));
    }
    let pair = |i: usize| degrees[i].max(degrees[i + 1]);
    let lightest = (0..m as usize - 1).map(pair).min().unwrap();
    let j = (b as usize..(1 << a) - 1)
        .find(|&i| pair(i) == lightest)
        .ok_or_else(|| {
            Error::Hypothesis(format!(
                "no lightest pair at positions {}..{}",
                b,
                (1u32 << a) - 1
            ))
        })?;
    let r = lightest;
    if r < 31 - m.leading_zeros() {
        return Err(Error::Hypothesis(format!("max(k_j, k_j+1) = {r} is below floor(log2 m)")));
    }
    let kmax = *degrees.iter().max().unwrap();
    let (kappa, s) = kappa_for(a, kmax)?;
    if n < kappa {
        return Err(Error::InvalidParameter(format!("construction lives in Q_{kappa}; n = {n} is too small")));
    }
    let h = dominated_subcubes(kappa, s, r)?;
    let graph = lift_to_qn(&h, &h, n)?;
    let tree = build_caterpillar(&degrees.iter().map(|&d| d as usize).collect::<Vec<_>>())?;
    let mut report = BoundReport::new(tree.literal(), "caterpillar", n, kappa, &graph)
        .with_formula(dominated_count(kappa, a, r) * pow2(n - kappa))
        .with_bound(int(r as i128) * pow2(n - 1))
        .note(format!("a = {a}, b = {b}, lightest pair at position {}", j + 1));
    report.lift = LiftKind::Copies;
    Ok(Construction { base: h, graph, report })
}

/// A `VGS_{k,m}`-saturated subgraph from a dominating set of `Q_{k-1}`'s.
///
/// `r = min_i max(k_i1, k_i2)`. Needs two legs whose first degree is at
/// least `r`, `m <= P_{k-1}(Q_{k-1})` and room for `r - 1 >= k`.
pub fn vgs_construction(k: u32, m: u32, degrees: &[Vec<u32>], n: u32) -> Result<Construction> {
    if k < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!("need k >= 2 and m >= 2, got k = {k}, m = {m}")));
    }
    if degrees.len() != k as usize || degrees.iter().any(|row| row.len() != m as usize) {
        return Err(Error::InvalidParameter(format!("degrees must be a {k} x {m} array")));
    }
    let r = degrees.iter().map(|row| row[0].max(row[1])).min().unwrap();
    if degrees.iter().filter(|row| row[0] >= r).count() < 2 {
        return Err(Error::Hypothesis(format!("fewer than two legs start with degree >= {r}")));
    }
    if r < k {
        return Err(Error::Hypothesis(format!("r = {r} is below k = {k}")));
    }
    match pj_qk(k - 1, k - 1) {
        Ok(p) if m > p => {
            return Err(Error::Hypothesis(format!("m = {m} exceeds P_{}(Q_{}) = {p}", k - 1, k - 1)));
        }
        Ok(_) => {}
        Err(Error::BudgetExceeded(_)) if m <= k - 2 => {}
        Err(Error::BudgetExceeded(_)) => {
            return Err(Error::BudgetExceeded(format!("P_{}(Q_{}) not searched", k - 1, k - 1)));
        }
        Err(e) => return Err(e),
    }
    let a = k - 1;
    let kmax = *degrees.iter().flatten().max().unwrap();
    let (kappa, s) = kappa_for(a, kmax)?;
    if n < kappa {
        return Err(Error::InvalidParameter(format!("construction lives in Q_{kappa}; n = {n} is too small")));
    }
    let h = dominated_subcubes(kappa, s, r)?;
    let graph = lift_to_qn(&h, &h, n)?;
    let rows: Vec<Vec<usize>> = degrees.iter().map(|r| r.iter().map(|&d| d as usize).collect()).collect();
    let tree = build_vgs(k as usize, m as usize, &rows)?;
    let kk = int(kappa as i128);
    let claimed = pow2(kappa - k) / (kk - int(k as i128) + int(2)) * kk * pow2(k)
        + int(r as i128 - 2) * pow2(kappa - 1);
    let direct = dominated_count(kappa, a, r) * pow2(n - kappa);
    let mut report = BoundReport::new(tree.literal(), "vgs", n, kappa, &graph)
        .with_formula(claimed * pow2(n - kappa))
        .with_bound(int(r as i128) * pow2(n - 1))
        .note(format!("direct count {}", super::rational_string(&direct)));
    report.lift = LiftKind::Copies;
    Ok(Construction { base: h, graph, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_values() {
        assert_eq!(kappa_for(2, 4).unwrap(), (9, 3));
        assert_eq!(kappa_for(2, 3).unwrap(), (5, 2));
        assert!(kappa_for(2, 8).is_err());
    }

    #[test]
    fn six_vertex_caterpillar() {
        let c = caterpillar_construction(&[4, 4, 4, 4, 4, 4], 9).unwrap();
        assert_eq!(c.graph.edge_count(), 960);
        assert_eq!(c.report.formula_matches, Some(true));
        assert_eq!(c.report.within_bound, Some(true));
        assert_eq!(c.report.bound, Some(Rational::from_integer(1024)));
        assert!(c.graph.edges().iter().all(|e| c.graph.degree(e.lo()) >= 3));
    }

    #[test]
    fn caterpillar_rejections() {
        assert!(matches!(caterpillar_construction(&[3, 3, 2, 2, 3, 3], 9), Err(Error::Infeasible(_))));
        assert!(matches!(caterpillar_construction(&[3, 3, 3, 3, 3], 9), Err(Error::Hypothesis(_))));
        // lightest pair at the end
        assert!(matches!(caterpillar_construction(&[2, 2, 4, 4, 4, 4], 9), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn vgs_checks() {
        let d = vec![vec![2, 2], vec![2, 2], vec![2, 2]];
        assert!(matches!(vgs_construction(3, 2, &d, 9), Err(Error::Hypothesis(_))));
        let d = vec![vec![3, 3], vec![3, 3]];
        assert!(matches!(vgs_construction(2, 2, &d, 9), Err(Error::Hypothesis(_))));
    }
}
