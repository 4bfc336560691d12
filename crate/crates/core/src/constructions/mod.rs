//! Saturated subgraphs of `Q_n` for the named tree families.

mod genstar;
mod kappa;
mod paths;
mod report;
mod stars;
mod subcube;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use genstar::genstar_construction;
pub use kappa::{caterpillar_construction, vgs_construction};
pub use paths::{
    laceable_path, longest_path_after_deletion, near_hamiltonian_path, path_construction,
    path_from_odd_start, prefix_deleted_set,
};
pub use report::{rational_string, BoundReport, Construction, LiftKind, Rational};
pub(crate) use report::{pow2, ser_opt_rational, ser_rational};
pub use stars::{doublestar_construction, multistar_construction, star_construction};
pub use subcube::{disjoint_subcube, split_dimension};

use crate::cube::{lift_to_qn, CubeAutomorphism, CubeSubgraph};
use crate::error::{Error, Result};
use crate::saturation::is_saturated;
use crate::tree::{Tree, TreeFamily};

/// `h` on even subcubes, `a(h)` on odd ones.
pub(crate) fn lift_alternating(
    h: &CubeSubgraph,
    n: u32,
    a: &CubeAutomorphism,
    certified: bool,
) -> Result<(CubeSubgraph, LiftKind)> {
    if n == h.dim() {
        return Ok((h.clone(), LiftKind::None));
    }
    let g = lift_to_qn(h, &h.apply_automorphism(a)?, n)?;
    Ok((g, LiftKind::Automorphism { map: a.to_string(), certified }))
}

/// Which construction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Auto,
    Subcube,
    Path,
    Star,
    Doublestar,
    Multistar,
    Caterpillar,
    Genstar,
    Vgs,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Auto,
        Method::Subcube,
        Method::Path,
        Method::Star,
        Method::Doublestar,
        Method::Multistar,
        Method::Caterpillar,
        Method::Genstar,
        Method::Vgs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Subcube => "subcube",
            Method::Path => "path",
            Method::Star => "star",
            Method::Doublestar => "doublestar",
            Method::Multistar => "multistar",
            Method::Caterpillar => "caterpillar",
            Method::Genstar => "genstar",
            Method::Vgs => "vgs",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method '{s}'")))
    }
}

fn wrong_family(method: Method, t: &Tree) -> Error {
    Error::InvalidParameter(format!("method {method} does not apply to {}", t.literal()))
}

fn u32s(xs: &[usize]) -> Vec<u32> {
    xs.iter().map(|&x| x as u32).collect()
}

fn run(t: &Tree, n: u32, method: Method) -> Result<Construction> {
    let family = t.family().cloned();
    match (method, family) {
        (Method::Subcube, _) => disjoint_subcube(t, n),
        (Method::Path, Some(TreeFamily::Path { k })) => path_construction(k as u32, n),
        (Method::Star, Some(TreeFamily::Star { k })) => star_construction(k as u32, n),
        (Method::Doublestar, Some(TreeFamily::Caterpillar { degrees })) if degrees.len() == 2 => {
            let (a, b) = (degrees[0].max(degrees[1]), degrees[0].min(degrees[1]));
            doublestar_construction(a as u32, b as u32, n)
        }
        (Method::Multistar, Some(TreeFamily::Caterpillar { degrees })) => {
            multistar_construction(&u32s(&degrees), n)
        }
        (Method::Caterpillar, Some(TreeFamily::Caterpillar { degrees })) => {
            caterpillar_construction(&u32s(&degrees), n)
        }
        (Method::Genstar, Some(TreeFamily::GenStar { k, m })) => {
            genstar_construction(k as u32, m as u32, n)
        }
        (Method::Vgs, Some(TreeFamily::Vgs { k, m, degrees })) => {
            let rows: Vec<Vec<u32>> = degrees.iter().map(|r| u32s(r)).collect();
            vgs_construction(k as u32, m as u32, &rows, n)
        }
        _ => Err(wrong_family(method, t)),
    }
}

/// Family-specific methods tried by `auto`, in order.
fn auto_candidates(t: &Tree) -> Vec<Method> {
    let mut out = match t.family() {
        Some(TreeFamily::Path { .. }) => vec![Method::Path],
        Some(TreeFamily::Star { .. }) => vec![Method::Star],
        Some(TreeFamily::GenStar { .. }) => vec![Method::Genstar],
        Some(TreeFamily::Caterpillar { degrees }) => match degrees.len() {
            2 => vec![Method::Doublestar],
            3 | 4 => vec![Method::Multistar, Method::Caterpillar],
            _ => vec![Method::Caterpillar],
        },
        Some(TreeFamily::Vgs { .. }) => vec![Method::Vgs],
        None => Vec::new(),
    };
    out.push(Method::Subcube);
    out
}

/// Builds a saturated-subgraph candidate for `t` in `Q_n`.
///
/// `Auto` tries the family construction first and falls back to the
/// disjoint-subcube graph; the failures are kept as notes.
pub fn construct(t: &Tree, n: u32, method: Method) -> Result<Construction> {
    crate::cube::check_dim(n)?;
    if method != Method::Auto {
        return run(t, n, method);
    }
    let mut skipped = Vec::new();
    let mut last = None;
    for m in auto_candidates(t) {
        match run(t, n, m) {
            Ok(mut c) => {
                c.report.notes.splice(0..0, skipped);
                return Ok(c);
            }
            Err(e) => {
                skipped.push(format!("auto: {m} skipped: {e}"));
                last = Some(e);
            }
        }
    }
    Err(last.unwrap_or_else(|| wrong_family(method, t)))
}

/// Runs the exhaustive check and records the outcome in the report.
pub fn verify(c: &mut Construction, t: &Tree) -> Result<bool> {
    let r = is_saturated(&c.graph, t)?;
    c.report.verified = Some(r.saturated);
    if !r.free {
        c.report.notes.push("graph contains the tree".into());
    } else if !r.saturated {
        c.report
            .notes
            .push(format!("{} non-edges do not complete the tree", r.failing_edges.len()));
    }
    Ok(r.saturated)
}
