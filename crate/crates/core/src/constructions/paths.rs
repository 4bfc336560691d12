//! Paths: vertex deletions of one parity that cap the longest path, the
//! explicit long paths around them, and the saturated graphs they give.

use super::report::{pow2, BoundReport, Construction, LiftKind, Rational};
use super::lift_alternating;
use crate::cube::{full_cube, lift_to_qn, CubeAutomorphism, CubeSubgraph, Edge};
use crate::error::{Error, Result};
use crate::tree::build_path;

#[inline]
fn gray(t: u32) -> u32 {
    t ^ (t >> 1)
}

fn lowest_bits(mask: u32, count: usize) -> Vec<u32> {
    (0..32).filter(|b| mask >> b & 1 == 1).take(count).collect()
}

/// Hamiltonian path from `s` to `t` through the subcube spanned by the
/// bits of `free` (all other bits fixed). `s` and `t` must have opposite
/// parity.
pub fn laceable_path(free: u32, s: u32, t: u32) -> Vec<u32> {
    debug_assert_eq!((s ^ t) & !free, 0);
    debug_assert_eq!((s ^ t).count_ones() % 2, 1);
    if free.count_ones() == 1 {
        return vec![s, t];
    }
    let c = (s ^ t).trailing_zeros();
    let rest = free & !(1 << c);
    let b = rest.trailing_zeros();
    let x = s ^ (1 << b);
    let mut path = laceable_path(rest, s, x);
    path.extend(laceable_path(rest, x ^ (1 << c), t));
    path
}

/// Path from `s` to `t` through every vertex of the subcube spanned by
/// `free` except `z`. Needs at least two free bits, `s` and `t` of one
/// parity and `z` of the other.
pub fn near_hamiltonian_path(free: u32, s: u32, t: u32, z: u32) -> Vec<u32> {
    debug_assert!(free.count_ones() >= 2);
    debug_assert_eq!((s ^ t).count_ones() % 2, 0);
    debug_assert_eq!((s ^ z).count_ones() % 2, 1);
    if free.count_ones() == 2 {
        // s and t are opposite corners of a square; go round the other way
        let w = s ^ t ^ z;
        return vec![s, w, t];
    }
    let c = (s ^ t).trailing_zeros();
    let rest = free & !(1 << c);
    let same_side = |v: u32| (v ^ s) >> c & 1 == 0;
    if same_side(z) {
        let bs = lowest_bits(rest, 2);
        let x = s ^ (1 << bs[0]) ^ (1 << bs[1]);
        let mut path = near_hamiltonian_path(rest, s, x, z);
        path.extend(laceable_path(rest, x ^ (1 << c), t));
        path
    } else {
        let x = lowest_bits(rest, 2)
            .into_iter()
            .map(|b| s ^ (1 << b))
            .find(|&x| x ^ (1 << c) != t)
            .expect("two candidate crossings, at most one blocked");
        let mut path = laceable_path(rest, s, x);
        path.extend(near_hamiltonian_path(rest, x ^ (1 << c), t, z));
        path
    }
}

fn check_kj(k: u32, j: u32) -> Result<()> {
    if !(2..=crate::cube::MAX_DIM).contains(&k) || j == 0 || j > 1 << (k - 1) {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= k and 0 < j <= 2^(k-1), got k = {k}, j = {j}"
        )));
    }
    Ok(())
}

/// Bit `i - 1` of `j - 1`: whether the block of vertices with highest set
/// bit `i` loses its even vertices.
#[inline]
fn block_deleted(j: u32, i: u32) -> bool {
    (j - 1) >> (i - 1) & 1 == 1
}

/// The deleted set: `0` together with the even vertices whose highest set
/// bit is `i`, for every `i` with bit `i - 1` of `j - 1` set. Its size is
/// `j`. Sorted.
pub fn prefix_deleted_set(k: u32, j: u32) -> Result<Vec<u32>> {
    check_kj(k, j)?;
    let mut out = vec![0];
    for i in 1..k {
        if block_deleted(j, i) {
            let lo = 1u32 << i;
            out.extend((lo..lo << 1).filter(|v| v.count_ones() % 2 == 0));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Walks the intact blocks in increasing order from `start` (which must be
/// a vertex with no bits at or above the first block to visit), covering
/// each block with a Gray-code path.
fn sweep_blocks(path: &mut Vec<u32>, blocks: impl Iterator<Item = u32>) {
    for i in blocks {
        let cur = *path.last().unwrap();
        let entry = cur ^ (1 << i);
        let low = entry & ((1 << i) - 1);
        let high = entry & !((1 << i) - 1);
        for t in 0..1u32 << i {
            path.push(high | (low ^ gray(t)));
        }
    }
}

/// The deleted set and a path of length `2^k - 2j` avoiding it, starting
/// at `1`.
pub fn longest_path_after_deletion(k: u32, j: u32) -> Result<(Vec<u32>, Vec<u32>)> {
    let c = prefix_deleted_set(k, j)?;
    let mut path = vec![1];
    sweep_blocks(&mut path, (1..k).filter(|&i| !block_deleted(j, i)));
    Ok((c, path))
}

/// A path of length `2^k - 2j` avoiding the deleted set and starting at
/// the odd vertex `v`. Needs `j <= 2^(k-2)`.
pub fn path_from_odd_start(k: u32, j: u32, v: u32) -> Result<Vec<u32>> {
    check_kj(k, j)?;
    if k < 2 || j > 1 << (k - 2) {
        return Err(Error::InvalidParameter(format!(
            "odd starts need j <= 2^(k-2), got k = {k}, j = {j}"
        )));
    }
    if v >= 1 << k || v.count_ones() % 2 == 0 {
        return Err(Error::InvalidParameter(format!("{v:#b} is not an odd vertex of Q_{k}")));
    }
    if v == 1 {
        return Ok(longest_path_after_deletion(k, j)?.1);
    }
    let i = 31 - v.leading_zeros();
    let top = 1u32 << i;
    let mut path;
    let skip;
    if !block_deleted(j, i) {
        // cover the whole block from v, ending next to 1
        path = laceable_path(top - 1, v, top | 1);
        skip = i;
    } else {
        // cross into the top block, which is intact, and cover all of it
        // but one even vertex
        let hi = 1u32 << (k - 1);
        path = vec![v];
        path.extend(near_hamiltonian_path(hi - 1, v | hi, hi | 1, hi));
        skip = k - 1;
    }
    path.push(1);
    sweep_blocks(&mut path, (1..k).filter(|&b| b != skip && !block_deleted(j, b)));
    Ok(path)
}

/// `i = floor(log2(k - 1))` and `r = k - 2^i`.
fn split_length(k: u32) -> (u32, u32) {
    let i = 31 - (k - 1).leading_zeros();
    (i, k - (1 << i))
}

/// A `P_k`-saturated subgraph of `Q_n` for `k > 4`.
///
/// Odd `k`: `Q_{i+1}` minus the deleted set of size `2^(i-1) - (r-1)/2`,
/// lifted by alternating it with a unit translate. Even `k`: two such
/// graphs in the halves of `Q_{i+2}` with the second deleted set moved by
/// flipping the top two coordinates, joined only at the deleted vertices.
pub fn path_construction(k: u32, n: u32) -> Result<Construction> {
    if k <= 4 {
        return Err(Error::InvalidParameter(format!("path construction needs k > 4, got {k}")));
    }
    if k > 1 << 20 {
        return Err(Error::InvalidParameter(format!("path length {k} too large")));
    }
    let (i, r) = split_length(k);
    let tree = build_path(k as usize)?;
    if r % 2 == 1 {
        let base_dim = i + 1;
        if n < base_dim {
            return Err(Error::InvalidParameter(format!("P_{k} needs n >= {base_dim}")));
        }
        let j = (1 << (i - 1)) - (r - 1) / 2;
        let mut h = full_cube(base_dim)?;
        for c in prefix_deleted_set(base_dim, j)? {
            h.isolate(c);
        }
        // Odd vertices are endpoints and the deleted vertices are even, so a
        // unit translation sends the non-endpoints onto endpoints.
        let shift = CubeAutomorphism::translation(base_dim, 1)?;
        let (graph, lift) = lift_alternating(&h, n, &shift, true)?;
        let e = |x: u32| Rational::from_integer(x as i128);
        let formula = e(i + 1) * e(k - 1) / pow2(i + 1) * pow2(n - 1);
        let mut report = BoundReport::new(tree.literal(), "path", n, base_dim, &graph)
            .with_formula(formula)
            .with_bound(formula)
            .note(format!("deleted {j} even vertices of Q_{base_dim}"));
        report.lift = lift;
        return Ok(Construction { base: h, graph, report });
    }
    let base_dim = i + 2;
    if n < base_dim {
        return Err(Error::InvalidParameter(format!("P_{k} needs n >= {base_dim}")));
    }
    let j = (1 << (i - 1)) - (r - 2) / 2;
    let c = prefix_deleted_set(i + 1, j)?;
    let flip = 0b11 << (i - 1);
    let c2: Vec<u32> = c.iter().map(|&x| x ^ flip).collect();
    if c.iter().any(|x| c2.contains(x)) {
        return Err(Error::Infeasible("shifted deleted set meets the original".into()));
    }
    let half = 1u32 << (i + 1);
    let mut h = CubeSubgraph::empty(base_dim)?;
    for (side, deleted) in [(0u32, &c), (half, &c2)] {
        for x in 0..half {
            for b in 0..=i {
                let y = x ^ (1 << b);
                if x < y && !deleted.contains(&x) && !deleted.contains(&y) {
                    h.add_edge(Edge::new(side | x, side | y)?)?;
                }
            }
        }
    }
    for &x in c.iter().chain(&c2) {
        h.add_edge(Edge::new(x, half | x)?)?;
    }
    // Every vertex starts a path of length at least k - 3, so an edge
    // between two copies closes a path of length at least 2k - 5 >= k.
    let graph = lift_to_qn(&h, &h, n)?;
    let lift = if n == base_dim { LiftKind::None } else { LiftKind::Copies };
    let e = |x: u32| Rational::from_integer(x as i128);
    let formula = (e(i) * e(k - 2) / pow2(i + 1) + e(1)) * pow2(n - 1);
    let mut report = BoundReport::new(tree.literal(), "path", n, base_dim, &graph)
        .with_formula(formula)
        .with_bound(formula)
        .note(format!("deleted {j} even vertices in each half of Q_{base_dim}"));
    report.lift = lift;
    Ok(Construction { base: h, graph, report })
}
