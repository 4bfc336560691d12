//! Lower bounds, brute-force saturation numbers, `P_j(Q_k)` and the
//! conjectured values it is compared against.

use num_integer::binomial;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{construct, pow2, ser_opt_rational, ser_rational, Method, Rational};
use crate::cube::{full_cube, CubeSubgraph, Edge};
use crate::embed::{Embedder, HostView, SearchOptions};
use crate::error::{Error, Result};
use crate::tree::{build_genstar, Tree};

/// `(δ-1)/(2n-δ+1) · n · 2^(n-1)` with `δ = emin(T)`.
pub fn lower_bound(t: &Tree, n: u32) -> Result<Rational> {
    let (delta, _) = t
        .emin()
        .ok_or_else(|| Error::InvalidParameter("tree has no edges".into()))?;
    let delta = delta as i128;
    let nn = n as i128;
    if delta > nn {
        return Err(Error::InvalidParameter(format!(
            "emin {delta} exceeds n = {n}; the tree does not fit in Q_{n}"
        )));
    }
    Ok(Rational::new(delta - 1, 2 * nn - delta + 1) * Rational::from_integer(nn) * pow2(n - 1))
}

/// Minimum edge count of a `T`-saturated subgraph of `Q_n`, by enumerating
/// all `2^{e(Q_n)}` subgraphs. Only `n <= 3` is in budget.
pub fn exact_sat(t: &Tree, n: u32) -> Result<u64> {
    if n > 3 {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive enumeration covers n <= 3, got n = {n}"
        )));
    }
    let edges = full_cube(n)?.edges();
    let m = edges.len();
    let em = Embedder::new(t);
    let opts = SearchOptions::default();
    let free: Vec<bool> = (0..1u32 << m)
        .into_par_iter()
        .map(|mask| {
            let g = subgraph_of(n, &edges, mask)?;
            Ok(em.find(HostView::new(&g), &[], &opts)?.is_none())
        })
        .collect::<Result<_>>()?;
    let full = (1u32 << m) - 1;
    (0..=full)
        .filter(|&mask| {
            free[mask as usize] && (0..m).all(|b| mask >> b & 1 == 1 || !free[(mask | 1 << b) as usize])
        })
        .map(|mask| mask.count_ones() as u64)
        .min()
        .ok_or_else(|| Error::Infeasible("no saturated subgraph".into()))
}

fn subgraph_of(n: u32, edges: &[Edge], mask: u32) -> Result<CubeSubgraph> {
    CubeSubgraph::from_edges(
        n,
        edges.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
    )
}

/// Largest `m` such that `j` paths of length `m` leave one vertex of `Q_k`
/// and meet only there. By vertex transitivity the hub is `0`.
pub fn pj_qk(j: u32, k: u32) -> Result<u32> {
    if j == 0 {
        return Err(Error::InvalidParameter("need j >= 1".into()));
    }
    if k > 5 {
        return Err(Error::BudgetExceeded(format!("P_j(Q_k) is searched for k <= 5, got k = {k}")));
    }
    if j > k {
        return Ok(0);
    }
    let q = full_cube(k)?;
    let opts = SearchOptions { budget: Some(500_000_000), canonical: true };
    let mut best = 0;
    let mut m = 1;
    while (j * m) < (1 << k) {
        let gs = build_genstar(j as usize, m as usize)?;
        if Embedder::new(&gs).find(HostView::new(&q), &[(0, 0)], &opts)?.is_none() {
            break;
        }
        best = m;
        m += 1;
    }
    Ok(best)
}

/// The `k` paths from `0` whose direction sequences are the rotations
/// `(i, i+1, ..., i+k-2)` of `1..=k`, as vertex lists.
pub fn rotated_paths(k: u32) -> Result<Vec<Vec<u32>>> {
    if !(1..=crate::cube::MAX_DIM).contains(&k) {
        return Err(Error::DimensionOutOfRange(k));
    }
    Ok((0..k)
        .map(|i| {
            let mut v = 0u32;
            let mut path = vec![v];
            for step in 0..k.saturating_sub(1) {
                let coord = (i + step) % k + 1;
                v ^= 1 << crate::cube::coord_bit(k, coord);
                path.push(v);
            }
            path
        })
        .collect())
}

/// Whether `paths` are paths of `Q_k` from a common hub, disjoint elsewhere.
pub fn paths_disjoint_from_hub(paths: &[Vec<u32>]) -> bool {
    let Some(hub) = paths.first().and_then(|p| p.first()).copied() else {
        return true;
    };
    let mut seen = std::collections::HashSet::new();
    for p in paths {
        if p.first() != Some(&hub) {
            return false;
        }
        if p.windows(2).any(|w| (w[0] ^ w[1]).count_ones() != 1) {
            return false;
        }
        if p[1..].iter().any(|&v| v == hub || !seen.insert(v)) {
            return false;
        }
    }
    true
}

/// Prediction for `P_j(Q_n)` from the binomial-sum formula, next to the
/// searched value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PjConjecture {
    pub j: u32,
    pub n: u32,
    pub e: u64,
    pub o: u64,
    pub a: u64,
    pub b: u64,
    pub predicted: u64,
    /// Searched value, when in budget.
    pub actual: Option<u32>,
    pub agrees: Option<bool>,
    /// Guaranteed lower bound `n - 1` for `j <= n`.
    pub guaranteed: Option<u32>,
    pub below_guarantee: bool,
}

/// `E(n) = Σ_{i=2}^{⌊n/2⌋} C(n,i)`, `O(n) = 2^n - E(n) - 1`,
/// `a = ⌊E/j⌋`, `b = ⌊O/j⌋`; predicts `2b` when `b <= a`, else `2a+1`.
/// Evaluated with `k = n`.
pub fn conjecture_pj(j: u32, n: u32) -> Result<PjConjecture> {
    if j == 0 {
        return Err(Error::InvalidParameter("need j >= 1".into()));
    }
    if n > 40 {
        return Err(Error::InvalidParameter(format!("n = {n} too large")));
    }
    let e: u64 = (2..=n as u64 / 2).map(|i| binomial(n as u64, i)).sum();
    let o = (1u64 << n) - e - 1;
    let (a, b) = (e / j as u64, o / j as u64);
    let predicted = if b <= a { 2 * b } else { 2 * a + 1 };
    let actual = match pj_qk(j, n) {
        Ok(v) => Some(v),
        Err(Error::BudgetExceeded(_)) => None,
        Err(err) => return Err(err),
    };
    let guaranteed = (j <= n).then(|| n.saturating_sub(1));
    Ok(PjConjecture {
        j,
        n,
        e,
        o,
        a,
        b,
        predicted,
        actual,
        agrees: actual.map(|v| v as u64 == predicted),
        guaranteed,
        below_guarantee: guaranteed.is_some_and(|g| predicted < g as u64),
    })
}

/// `(δ + C - 1) · 2^(n-1)` against the exact saturation number, with `C`
/// the largest distance from a vertex to a diameter path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpineCheck {
    pub tree: String,
    pub n: u32,
    pub delta: u32,
    pub c: u32,
    pub bound: u64,
    pub exact: u64,
    pub holds: bool,
}

pub fn spine_bound_check(t: &Tree, n: u32) -> Result<SpineCheck> {
    let (delta, _) = t
        .emin()
        .ok_or_else(|| Error::InvalidParameter("tree has no edges".into()))?;
    let c = t.distance_to_spine() as u32;
    let exact = exact_sat(t, n)?;
    let bound = (delta as u64 + c as u64).saturating_sub(1) << (n - 1);
    Ok(SpineCheck {
        tree: t.literal(),
        n,
        delta: delta as u32,
        c,
        bound,
        exact,
        holds: exact <= bound,
    })
}

/// Lower, upper and (when in budget) exact saturation numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatInterval {
    pub tree: String,
    pub n: u32,
    #[serde(serialize_with = "ser_rational")]
    pub lower: Rational,
    /// Smallest verified construction.
    pub upper: Option<u64>,
    pub upper_method: Option<String>,
    pub exact: Option<u64>,
    /// Bound stated for the family, when one applies.
    #[serde(serialize_with = "ser_opt_rational")]
    pub stated_upper: Option<Rational>,
}

/// Methods tried for the upper end of a [`SatInterval`].
const UPPER_METHODS: [Method; 8] = [
    Method::Subcube,
    Method::Path,
    Method::Star,
    Method::Doublestar,
    Method::Multistar,
    Method::Caterpillar,
    Method::Genstar,
    Method::Vgs,
];

/// Graphs up to this many vertices are checked before counting as an upper bound.
const VERIFY_ORDER: usize = 1 << 7;

pub fn sat_interval(t: &Tree, n: u32) -> Result<SatInterval> {
    let lower = lower_bound(t, n)?;
    let mut upper: Option<(u64, String)> = None;
    let mut stated = None;
    for m in UPPER_METHODS {
        let Ok(mut c) = construct(t, n, m) else { continue };
        if stated.is_none() && m != Method::Subcube {
            stated = c.report.bound;
        }
        let ok = if c.graph.order() <= VERIFY_ORDER && t.vertex_count() <= 16 {
            crate::constructions::verify(&mut c, t)?
        } else {
            false
        };
        if ok && upper.as_ref().is_none_or(|(e, _)| c.report.edges < *e) {
            upper = Some((c.report.edges, m.name().to_string()));
        }
    }
    let exact = match exact_sat(t, n) {
        Ok(v) => Some(v),
        Err(Error::BudgetExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(SatInterval {
        tree: t.literal(),
        n,
        lower,
        upper: upper.as_ref().map(|u| u.0),
        upper_method: upper.map(|u| u.1),
        exact,
        stated_upper: stated,
    })
}
