use std::collections::HashMap;

use super::report::{pow2, BoundReport, Construction, LiftKind, Rational};
use crate::cube::{full_cube, lift_to_qn, CubeSubgraph};
use crate::error::{Error, Result};
use crate::tree::Tree;

/// `min` over tree edges of the larger cubical dimension of the two sides,
/// with a minimising edge.
pub fn split_dimension(t: &Tree) -> Result<(u32, (usize, usize))> {
    let mut memo: HashMap<String, u32> = HashMap::new();
    let mut cd = |x: &Tree| -> Result<u32> {
        let key = x.literal();
        if let Some(&d) = memo.get(&key) {
            return Ok(d);
        }
        let d = x.cubical_dimension()?;
        memo.insert(key, d);
        Ok(d)
    };
    let mut best: Option<(u32, (usize, usize))> = None;
    for (u, v) in t.edges() {
        let (a, b) = t.split_at_edge(u, v)?;
        let d = cd(&a)?.max(cd(&b)?);
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, (u, v)));
        }
    }
    best.ok_or_else(|| Error::InvalidParameter("tree has no edges".into()))
}

/// Every edge inside each copy of `Q_k` in `Q_k □ Q_{n-k}`, where `k` is
/// the split dimension of `t`. Requires `k < cd(t) <= n`.
pub fn disjoint_subcube(t: &Tree, n: u32) -> Result<Construction> {
    let cd = t.cubical_dimension()?;
    let (k, (u, v)) = split_dimension(t)?;
    if k >= cd {
        return Err(Error::Hypothesis(format!(
            "splitting any edge leaves a side of cubical dimension {k} = cd(T)"
        )));
    }
    if n < cd {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is below the cubical dimension {cd} of the tree"
        )));
    }
    let (base, graph) = if k == 0 {
        (CubeSubgraph::empty(1)?, CubeSubgraph::empty(n)?)
    } else {
        let q = full_cube(k)?;
        let g = lift_to_qn(&q, &q, n)?;
        (q, g)
    };
    let mut report = BoundReport::new(t.literal(), "subcube", n, k, &graph)
        .with_formula(Rational::from_integer(k as i128) * pow2(n - 1))
        .note(format!("split at tree edge ({u}, {v}); cd(T) = {cd}"));
    report.lift = LiftKind::Copies;
    Ok(Construction {
        base,
        graph,
        report,
    })
}
