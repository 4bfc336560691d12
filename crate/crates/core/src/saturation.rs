//! Tree containment, saturation checks, endpoints and greedy completion.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cube::{format_bits, CubeAutomorphism, CubeSubgraph, Edge};
use crate::embed::{Embedder, HostView, SearchOptions};
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Outcome of a full saturation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub free: bool,
    pub saturated: bool,
    pub edges: u64,
    /// Non-edges whose addition creates no copy of the tree.
    pub failing_edges: Vec<String>,
    /// Image of each tree vertex in a copy found inside the graph.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_embedding: Option<Vec<String>>,
}

/// How to decide whether a vertex counts as an endpoint.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndpointRule {
    /// `v` carries a copy of `T - l` with the neighbour of the leaf `l` at
    /// `v`, so an edge from `v` to any fresh vertex completes `T`.
    #[default]
    Pendant,
    /// Every non-edge at `v` creates a copy (vacuously true at full degree).
    Universal,
    /// Some non-edge at `v` creates a copy.
    Existential,
}

/// A copy of `t` in `h`, as the host vertex of each tree vertex.
pub fn contains_tree(h: &CubeSubgraph, t: &Tree) -> Result<Option<Vec<u32>>> {
    Embedder::new(t).find(HostView::new(h), &[], &SearchOptions::default())
}

pub(crate) fn creates_copy_with(em: &Embedder, h: &CubeSubgraph, e: Edge) -> Result<bool> {
    let view = HostView::with_extra(h, e);
    for &(a, b) in em.edge_pins() {
        let pins = [(a, e.lo()), (b, e.hi())];
        if em.find(view, &pins, &SearchOptions::default())?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `h + e` contains a copy of `t` that uses `e`.
pub fn creates_copy(h: &CubeSubgraph, e: Edge, t: &Tree) -> Result<bool> {
    h.check_vertex(e.hi())?;
    if h.has_edge(e) {
        return Err(Error::InvalidParameter(format!(
            "{} is already an edge",
            e.render(h.dim())
        )));
    }
    creates_copy_with(&Embedder::new(t), h, e)
}

/// Freeness, then every non-edge of `h` in its cube.
pub fn is_saturated(h: &CubeSubgraph, t: &Tree) -> Result<SaturationReport> {
    let em = Embedder::new(t);
    let dim = h.dim();
    let edges = h.edge_count();
    if let Some(img) = em.find(HostView::new(h), &[], &SearchOptions::default())? {
        return Ok(SaturationReport {
            free: false,
            saturated: false,
            edges,
            failing_edges: Vec::new(),
            witness_embedding: Some(img.iter().map(|&v| format_bits(v, dim)).collect()),
        });
    }
    let results: Vec<(Edge, bool)> = h
        .non_edges()
        .into_par_iter()
        .map(|e| creates_copy_with(&em, h, e).map(|ok| (e, ok)))
        .collect::<Result<_>>()?;
    let failing_edges: Vec<String> = results
        .into_iter()
        .filter(|&(_, ok)| !ok)
        .map(|(e, _)| e.render(dim))
        .collect();
    Ok(SaturationReport {
        free: true,
        saturated: failing_edges.is_empty(),
        edges,
        failing_edges,
        witness_embedding: None,
    })
}

fn pendant_endpoints(h: &CubeSubgraph, t: &Tree) -> Result<Vec<bool>> {
    if t.vertex_count() < 2 {
        return Ok(vec![false; h.order()]);
    }
    // (leaf, parent) pairs, one per parent
    let mut cuts: Vec<(usize, usize)> = Vec::new();
    for l in 0..t.vertex_count() {
        if t.is_leaf(l) {
            let p = t.neighbors(l)[0];
            if !cuts.iter().any(|&(_, q)| q == p) {
                cuts.push((l, p));
            }
        }
    }
    let plans: Vec<(Embedder, usize)> = cuts
        .into_iter()
        .map(|(l, p)| {
            let smaller = t.remove_leaf(l)?;
            let p = if p > l { p - 1 } else { p };
            Ok((Embedder::new(&smaller), p))
        })
        .collect::<Result<_>>()?;
    (0..h.order() as u32)
        .into_par_iter()
        .map(|v| {
            for (em, p) in &plans {
                if em.find(HostView::new(h), &[(*p, v)], &SearchOptions::default())?.is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        })
        .collect()
}

/// Endpoints of `h` with respect to `t`, sorted.
pub fn endpoints(h: &CubeSubgraph, t: &Tree, rule: EndpointRule) -> Result<Vec<u32>> {
    let flags: Vec<bool> = match rule {
        EndpointRule::Pendant => pendant_endpoints(h, t)?,
        EndpointRule::Universal | EndpointRule::Existential => {
            let em = Embedder::new(t);
            (0..h.order() as u32)
                .into_par_iter()
                .map(|v| {
                    let mut any = false;
                    let mut all = true;
                    for e in h.non_edges_at(v) {
                        if creates_copy_with(&em, h, e)? {
                            any = true;
                        } else {
                            all = false;
                        }
                    }
                    Ok(if rule == EndpointRule::Universal { all } else { any })
                })
                .collect::<Result<_>>()?
        }
    };
    Ok((0..h.order() as u32).filter(|&v| flags[v as usize]).collect())
}

/// An automorphism `a` with `V \ U ⊆ a(U)`, `U` the endpoint set.
///
/// Then every vertex is an endpoint of `h` or of `a(h)`, so any edge
/// joining a copy of `h` to a copy of `a(h)` in the product lift completes
/// the tree. The whole group is searched up to dimension 7; above that
/// only translations are tried.
pub fn endpoint_automorphism_exists(
    h: &CubeSubgraph,
    t: &Tree,
    rule: EndpointRule,
) -> Result<Option<CubeAutomorphism>> {
    let ends = endpoints(h, t, rule)?;
    Ok(automorphism_covering(h.dim(), &ends))
}

pub(crate) fn automorphism_covering(dim: u32, ends: &[u32]) -> Option<CubeAutomorphism> {
    let order = 1usize << dim;
    let mut is_end = vec![false; order];
    for &v in ends {
        is_end[v as usize] = true;
    }
    let outside: Vec<u32> = (0..order as u32).filter(|&v| !is_end[v as usize]).collect();
    let works = |a: &CubeAutomorphism| {
        let inv = a.inverse();
        outside.iter().all(|&v| is_end[inv.apply_bits(v) as usize])
    };
    if dim <= 7 {
        CubeAutomorphism::all(dim).ok()?.find(|a| works(a))
    } else {
        (0..order as u32)
            .map(|s| CubeAutomorphism::translation(dim, s).unwrap())
            .find(|a| works(a))
    }
}

/// Adds, in lexicographic order, every non-edge accepted by `filter` that
/// keeps `h0` free of `t`. One pass suffices: an edge rejected once stays
/// rejected as the graph grows.
pub fn greedy_saturate(
    h0: &CubeSubgraph,
    t: &Tree,
    filter: Option<&(dyn Fn(Edge) -> bool + Sync)>,
) -> Result<CubeSubgraph> {
    let em = Embedder::new(t);
    if em.find(HostView::new(h0), &[], &SearchOptions::default())?.is_some() {
        return Err(Error::NotFree);
    }
    let mut h = h0.clone();
    for e in h0.non_edges() {
        if filter.is_some_and(|f| !f(e)) {
            continue;
        }
        if !creates_copy_with(&em, &h, e)? {
            h.add_edge(e)?;
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{full_cube, lift_to_qn};
    use crate::tree::{build_path, build_star};

    fn two_squares() -> CubeSubgraph {
        let mut g = full_cube(3).unwrap();
        for v in 0..4u32 {
            g.remove_edge(Edge::new(v, v | 4).unwrap()).unwrap();
        }
        g
    }

    fn odd_path_graph() -> CubeSubgraph {
        let mut g = full_cube(3).unwrap();
        g.isolate(0b000);
        g.isolate(0b011);
        g
    }

    /// Naive oracle: rebuild `h + e` and search from scratch for any copy.
    fn naive_saturated(h: &CubeSubgraph, t: &Tree) -> bool {
        if contains_tree(h, t).unwrap().is_some() {
            return false;
        }
        h.non_edges().into_iter().all(|e| {
            let mut g = h.clone();
            g.add_edge(e).unwrap();
            contains_tree(&g, t).unwrap().is_some()
        })
    }

    #[test]
    fn containment_examples() {
        let q = full_cube(3).unwrap();
        assert!(contains_tree(&q, &build_path(7).unwrap()).unwrap().is_some());
        let e = CubeSubgraph::empty(3).unwrap();
        assert!(contains_tree(&e, &build_path(1).unwrap()).unwrap().is_none());
        let mut c = q.clone();
        c.isolate(0);
        c.isolate(7);
        assert!(contains_tree(&c, &build_star(3).unwrap()).unwrap().is_none());
    }

    #[test]
    fn copy_creation_examples() {
        let s3 = build_star(3).unwrap();
        let g = two_squares();
        for v in 0..4u32 {
            assert!(creates_copy(&g, Edge::new(v, v | 4).unwrap(), &s3).unwrap());
        }
        let e = CubeSubgraph::empty(2).unwrap();
        assert!(!creates_copy(&e, Edge::new(0, 1).unwrap(), &build_path(2).unwrap()).unwrap());
        let h = odd_path_graph();
        let p5 = build_path(5).unwrap();
        for ne in h.non_edges() {
            assert!(creates_copy(&h, ne, &p5).unwrap());
        }
        assert!(creates_copy(&g, Edge::new(0, 1).unwrap(), &s3).is_err());
    }

    #[test]
    fn saturation_examples() {
        let r = is_saturated(&two_squares(), &build_star(3).unwrap()).unwrap();
        assert!(r.free && r.saturated);
        assert_eq!(r.edges, 8);
        let r = is_saturated(&full_cube(3).unwrap(), &build_path(7).unwrap()).unwrap();
        assert!(!r.free && !r.saturated);
        assert_eq!(r.witness_embedding.as_ref().unwrap().len(), 8);
        let r = is_saturated(&CubeSubgraph::empty(2).unwrap(), &build_path(1).unwrap()).unwrap();
        assert!(r.saturated);
        let r = is_saturated(&CubeSubgraph::empty(2).unwrap(), &build_path(2).unwrap()).unwrap();
        assert!(r.free && !r.saturated);
        assert_eq!(r.failing_edges.len(), 4);
    }

    #[test]
    fn matches_naive_oracle_on_q3() {
        let q = full_cube(3).unwrap();
        let all = q.edges();
        let trees = [
            build_path(2).unwrap(),
            build_path(3).unwrap(),
            build_star(3).unwrap(),
            build_star(2).unwrap(),
        ];
        for mask in (0u32..1 << 12).step_by(23) {
            let g = CubeSubgraph::from_edges(
                3,
                all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
            )
            .unwrap();
            for t in &trees {
                assert_eq!(is_saturated(&g, t).unwrap().saturated, naive_saturated(&g, t));
            }
        }
    }

    #[test]
    fn endpoint_examples() {
        let h = odd_path_graph();
        let p5 = build_path(5).unwrap();
        let ends = endpoints(&h, &p5, EndpointRule::Pendant).unwrap();
        for v in 0..8u32 {
            if v.count_ones() % 2 == 1 {
                assert!(ends.contains(&v));
            }
        }
        let e = CubeSubgraph::empty(2).unwrap();
        let p1 = build_path(1).unwrap();
        for rule in [EndpointRule::Pendant, EndpointRule::Universal, EndpointRule::Existential] {
            assert_eq!(endpoints(&e, &p1, rule).unwrap(), vec![0, 1, 2, 3]);
            assert_eq!(
                endpoints(&two_squares(), &build_star(3).unwrap(), rule).unwrap(),
                (0..8).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn automorphism_search() {
        assert!(automorphism_covering(3, &(0..8).collect::<Vec<_>>()).unwrap().is_identity());
        assert!(automorphism_covering(3, &[]).is_none());
        let odd: Vec<u32> = (0..8).filter(|v: &u32| v.count_ones() % 2 == 1).collect();
        let a = automorphism_covering(3, &odd).unwrap();
        for v in 0..8u32 {
            assert!(odd.contains(&v) || odd.contains(&a.inverse().apply_bits(v)));
        }
        let h = odd_path_graph();
        let p5 = build_path(5).unwrap();
        let a = endpoint_automorphism_exists(&h, &p5, EndpointRule::Pendant).unwrap().unwrap();
        let lifted = lift_to_qn(&h, &h.apply_automorphism(&a).unwrap(), 4).unwrap();
        assert!(is_saturated(&lifted, &p5).unwrap().saturated);
    }

    #[test]
    fn greedy_examples() {
        let p2 = build_path(2).unwrap();
        let g = greedy_saturate(&CubeSubgraph::empty(2).unwrap(), &p2, None).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(is_saturated(&g, &p2).unwrap().saturated);
        let sq = two_squares();
        let s3 = build_star(3).unwrap();
        assert_eq!(greedy_saturate(&sq, &s3, None).unwrap(), sq);
        assert_eq!(
            greedy_saturate(&full_cube(3).unwrap(), &p2, None),
            Err(Error::NotFree)
        );
        let p7 = build_path(7).unwrap();
        let mut c = full_cube(3).unwrap();
        c.isolate(0);
        c.isolate(7);
        let g = greedy_saturate(&c, &p7, None).unwrap();
        assert!(is_saturated(&g, &p7).unwrap().saturated);
        let only_low = |e: Edge| e.lo() < 4 && e.hi() < 4;
        let g = greedy_saturate(&CubeSubgraph::empty(3).unwrap(), &p2, Some(&only_low)).unwrap();
        assert!(g.edges().iter().all(|e| only_low(*e)));
    }
}
