//! Hypercube vertices, subgraphs of `Q_n`, automorphisms and the product lift.
//!
//! A vertex of `Q_n` is a bitmask. Coordinate `i` (1-based, leftmost in the
//! usual string notation `b1 b2 ... bn`) lives at bit position `n - i`, so the
//! rendered binary string reads most-significant bit first.
//!
//! A [`CubeSubgraph`] stores one direction mask per vertex: bit `b` of
//! `adj[v]` is set when the edge `{v, v ^ (1 << b)}` is present.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported cube dimension.
pub const MAX_DIM: u32 = 24;

pub(crate) fn check_dim(dim: u32) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(dim))
    }
}

/// Renders `bits` as a `dim`-character binary string, coordinate 1 first.
pub fn format_bits(bits: u32, dim: u32) -> String {
    format!("{:0width$b}", bits, width = dim as usize)
}

/// Parses a binary string into `(bits, dim)`.
pub fn parse_bits(s: &str) -> Result<(u32, u32)> {
    let s = s.trim();
    if s.is_empty() || s.len() > MAX_DIM as usize || !s.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::Parse(format!("not a binary vertex string: {s:?}")));
    }
    let bits = u32::from_str_radix(s, 2).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((bits, s.len() as u32))
}

/// Bit position of coordinate `coord` (1-based) in a `dim`-cube.
#[inline]
pub fn coord_bit(dim: u32, coord: u32) -> u32 {
    debug_assert!(coord >= 1 && coord <= dim);
    dim - coord
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    bits: u32,
    dim: u32,
}

impl Vertex {
    pub fn new(bits: u32, dim: u32) -> Result<Self> {
        check_dim(dim)?;
        if u64::from(bits) >= 1u64 << dim {
            return Err(Error::InvalidParameter(format!(
                "vertex {bits:#b} does not fit in dimension {dim}"
            )));
        }
        Ok(Self { bits, dim })
    }

    /// Parses a binary string; its length is the dimension.
    pub fn parse(s: &str) -> Result<Self> {
        let (bits, dim) = parse_bits(s)?;
        Self::new(bits, dim)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn dim(self) -> u32 {
        self.dim
    }

    /// Number of ones in the binary representation.
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// `weight mod 2`.
    pub fn parity(self) -> u32 {
        self.weight() & 1
    }

    /// The `dim` vertices at Hamming distance one, in increasing bit-position order.
    pub fn neighbors(self) -> Vec<Vertex> {
        (0..self.dim)
            .map(|b| Vertex {
                bits: self.bits ^ (1 << b),
                dim: self.dim,
            })
            .collect()
    }

    /// Unit vector with a one in coordinate `coord` (1-based).
    pub fn unit(dim: u32, coord: u32) -> Result<Self> {
        check_dim(dim)?;
        if coord == 0 || coord > dim {
            return Err(Error::InvalidParameter(format!(
                "coordinate {coord} outside 1..={dim}"
            )));
        }
        Ok(Self {
            bits: 1 << coord_bit(dim, coord),
            dim,
        })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bits(self.bits, self.dim))
    }
}

/// An undirected cube edge stored with `lo < hi`; orders lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: u32,
    hi: u32,
}

impl Edge {
    /// Returns an edge if `u` and `v` differ in exactly one bit.
    pub fn new(u: u32, v: u32) -> Result<Self> {
        let x = u ^ v;
        if x.count_ones() != 1 {
            return Err(Error::NotACubeEdge((u64::from(u) << 32) | u64::from(v)));
        }
        Ok(Self {
            lo: u.min(v),
            hi: u.max(v),
        })
    }

    #[inline]
    pub(crate) fn from_dir(v: u32, b: u32) -> Self {
        let w = v ^ (1 << b);
        Self {
            lo: v.min(w),
            hi: v.max(w),
        }
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    /// Bit position flipped by this edge.
    pub fn direction(self) -> u32 {
        (self.lo ^ self.hi).trailing_zeros()
    }

    pub fn endpoints(self) -> (u32, u32) {
        (self.lo, self.hi)
    }

    pub fn render(self, dim: u32) -> String {
        format!("{} {}", format_bits(self.lo, dim), format_bits(self.hi, dim))
    }
}

/// A spanning subgraph of `Q_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeSubgraph {
    dim: u32,
    adj: Vec<u32>,
}

impl CubeSubgraph {
    /// The edgeless subgraph on all `2^dim` vertices.
    pub fn empty(dim: u32) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            adj: vec![0; 1 << dim],
        })
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(dim: u32, edges: I) -> Result<Self> {
        let mut g = Self::empty(dim)?;
        for e in edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Number of vertices, `2^dim`.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    fn full_mask(&self) -> u32 {
        if self.dim == 32 {
            u32::MAX
        } else {
            (1u32 << self.dim) - 1
        }
    }

    pub(crate) fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.adj.len() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "vertex {v:#b} outside Q_{}",
                self.dim
            )))
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.hi)
    }

    /// Direction mask of `v`: bit `b` set iff `v ~ v ^ (1 << b)`.
    #[inline]
    pub fn dir_mask(&self, v: u32) -> u32 {
        self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> u32 {
        self.adj[v as usize].count_ones()
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        let mask = self.adj[v as usize];
        (0..self.dim).filter(move |b| mask >> b & 1 == 1).map(move |b| v ^ (1 << b))
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        (e.hi as usize) < self.adj.len() && self.adj[e.lo as usize] >> e.direction() & 1 == 1
    }

    pub fn add_edge(&mut self, e: Edge) -> Result<bool> {
        self.check_edge(e)?;
        let b = e.direction();
        let fresh = self.adj[e.lo as usize] >> b & 1 == 0;
        self.adj[e.lo as usize] |= 1 << b;
        self.adj[e.hi as usize] |= 1 << b;
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<bool> {
        self.check_edge(e)?;
        let b = e.direction();
        let present = self.adj[e.lo as usize] >> b & 1 == 1;
        self.adj[e.lo as usize] &= !(1 << b);
        self.adj[e.hi as usize] &= !(1 << b);
        Ok(present)
    }

    /// Deletes every edge incident to `v`.
    pub fn isolate(&mut self, v: u32) {
        let mask = self.adj[v as usize];
        for b in 0..self.dim {
            if mask >> b & 1 == 1 {
                self.adj[(v ^ (1 << b)) as usize] &= !(1 << b);
            }
        }
        self.adj[v as usize] = 0;
    }

    /// Adds every edge of `other` (same dimension) to `self`.
    pub fn union_with(&mut self, other: &CubeSubgraph) -> Result<()> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        for (a, b) in self.adj.iter_mut().zip(&other.adj) {
            *a |= *b;
        }
        Ok(())
    }

    pub fn edge_count(&self) -> u64 {
        self.adj.iter().map(|m| u64::from(m.count_ones())).sum::<u64>() / 2
    }

    /// All edges, sorted lexicographically on `(lo, hi)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for v in 0..self.adj.len() as u32 {
            // Upward edges from v, in increasing neighbor order.
            let up = self.adj[v as usize] & !v;
            for b in 0..self.dim {
                if up >> b & 1 == 1 {
                    out.push(Edge::from_dir(v, b));
                }
            }
        }
        out
    }

    /// Edges of `Q_dim` absent from `self`, sorted lexicographically.
    pub fn non_edges(&self) -> Vec<Edge> {
        let full = self.full_mask();
        let mut out = Vec::new();
        for v in 0..self.adj.len() as u32 {
            let up = !self.adj[v as usize] & !v & full;
            for b in 0..self.dim {
                if up >> b & 1 == 1 {
                    out.push(Edge::from_dir(v, b));
                }
            }
        }
        out
    }

    /// Edges of `Q_dim` absent from `self` and incident to `v`.
    pub fn non_edges_at(&self, v: u32) -> impl Iterator<Item = Edge> + '_ {
        let missing = !self.adj[v as usize] & self.full_mask();
        (0..self.dim)
            .filter(move |b| missing >> b & 1 == 1)
            .map(move |b| Edge::from_dir(v, b))
    }

    pub fn is_full_cube(&self) -> bool {
        let full = self.full_mask();
        self.adj.iter().all(|&m| m == full)
    }

    /// Image of `self` under a cube automorphism.
    pub fn apply_automorphism(&self, a: &CubeAutomorphism) -> Result<CubeSubgraph> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.dim(),
            });
        }
        let mut out = CubeSubgraph::empty(self.dim)?;
        for v in 0..self.adj.len() as u32 {
            let image = a.apply_bits(v);
            out.adj[image as usize] = a.apply_direction_mask(self.adj[v as usize]);
        }
        Ok(out)
    }

    /// Subgraph of the vertices whose bits under `mask` equal `value`, as a
    /// cube of the remaining free coordinates (compressed, order preserved).
    pub fn restrict_to_subcube(&self, fixed_mask: u32, value: u32) -> Result<CubeSubgraph> {
        let free: Vec<u32> = (0..self.dim).filter(|b| fixed_mask >> b & 1 == 0).collect();
        let d = free.len() as u32;
        let mut out = CubeSubgraph::empty(d.max(1))?;
        if d == 0 {
            return Ok(out);
        }
        for y in 0..1u32 << d {
            let mut v = value & fixed_mask;
            for (i, &b) in free.iter().enumerate() {
                v |= (y >> i & 1) << b;
            }
            let mask = self.adj[v as usize];
            let mut m = 0;
            for (i, &b) in free.iter().enumerate() {
                m |= (mask >> b & 1) << i;
            }
            out.adj[y as usize] = m;
        }
        Ok(out)
    }
}

/// `Q_n` itself.
pub fn full_cube(n: u32) -> Result<CubeSubgraph> {
    check_dim(n)?;
    let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(CubeSubgraph {
        dim: n,
        adj: vec![mask; 1 << n],
    })
}

/// Places `h0` in every subcube `(Q_k, x)` of `Q_n = Q_k □ Q_{n-k}` with `w(x)`
/// even and `h1` where `w(x)` is odd. No edges join distinct subcubes.
///
/// The `Q_k` factor occupies coordinates `1..=k` (the high bits), so the
/// vertex `(y, x)` has bits `(y << (n - k)) | x`.
pub fn lift_to_qn(h0: &CubeSubgraph, h1: &CubeSubgraph, n: u32) -> Result<CubeSubgraph> {
    let k = h0.dim;
    if h1.dim != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: h1.dim,
        });
    }
    check_dim(n)?;
    if k > n {
        return Err(Error::InvalidParameter(format!(
            "cannot lift Q_{k} into smaller Q_{n}"
        )));
    }
    let shift = n - k;
    let mut out = CubeSubgraph::empty(n)?;
    for x in 0..1u32 << shift {
        let src = if x.count_ones() % 2 == 0 { h0 } else { h1 };
        for y in 0..1u32 << k {
            out.adj[((y << shift) | x) as usize] = src.adj[y as usize] << shift;
        }
    }
    Ok(out)
}

/// A map `v ↦ π(v) ⊕ shift` where `π` permutes coordinates.
///
/// `perm[i] = j` sends coordinate `i + 1` to coordinate `j + 1` (0-based
/// storage of 1-based coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeAutomorphism {
    perm: Vec<u32>,
    shift: u32,
}

impl CubeAutomorphism {
    pub fn identity(dim: u32) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            perm: (0..dim).collect(),
            shift: 0,
        })
    }

    /// XOR translation by `shift`.
    pub fn translation(dim: u32, shift: u32) -> Result<Self> {
        let mut a = Self::identity(dim)?;
        if u64::from(shift) >= 1u64 << dim {
            return Err(Error::InvalidParameter(format!(
                "shift {shift:#b} does not fit in dimension {dim}"
            )));
        }
        a.shift = shift;
        Ok(a)
    }

    pub fn new(perm: Vec<u32>, shift: u32) -> Result<Self> {
        let dim = perm.len() as u32;
        check_dim(dim)?;
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= dim || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::InvalidParameter(format!(
                    "{perm:?} is not a permutation of 0..{dim}"
                )));
            }
        }
        if u64::from(shift) >= 1u64 << dim {
            return Err(Error::InvalidParameter(format!(
                "shift {shift:#b} does not fit in dimension {dim}"
            )));
        }
        Ok(Self { perm, shift })
    }

    pub fn dim(&self) -> u32 {
        self.perm.len() as u32
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.perm.iter().enumerate().all(|(i, &p)| p == i as u32)
    }

    /// Permutes bit positions without translating.
    fn permute(&self, bits: u32) -> u32 {
        let dim = self.dim();
        let mut out = 0;
        for (c, &target) in self.perm.iter().enumerate() {
            if bits >> coord_bit(dim, c as u32 + 1) & 1 == 1 {
                out |= 1 << coord_bit(dim, target + 1);
            }
        }
        out
    }

    pub fn apply_bits(&self, bits: u32) -> u32 {
        self.permute(bits) ^ self.shift
    }

    pub fn apply(&self, v: Vertex) -> Result<Vertex> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Vertex::new(self.apply_bits(v.bits()), v.dim())
    }

    /// Direction masks transform by the coordinate permutation alone.
    pub(crate) fn apply_direction_mask(&self, mask: u32) -> u32 {
        self.permute(mask)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &CubeAutomorphism) -> Result<CubeAutomorphism> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let perm = other.perm.iter().map(|&p| self.perm[p as usize]).collect();
        Ok(CubeAutomorphism {
            perm,
            shift: self.permute(other.shift) ^ self.shift,
        })
    }

    pub fn inverse(&self) -> CubeAutomorphism {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u32;
        }
        let inv = CubeAutomorphism { perm, shift: 0 };
        let shift = inv.permute(self.shift);
        CubeAutomorphism { shift, ..inv }
    }

    /// Every automorphism of `Q_dim`: permutations in lexicographic order,
    /// and for each permutation every shift in increasing order.
    pub fn all(dim: u32) -> Result<impl Iterator<Item = CubeAutomorphism>> {
        check_dim(dim)?;
        let perms = Permutations::new(dim as usize);
        Ok(perms.flat_map(move |perm| {
            (0..1u32 << dim).map(move |shift| CubeAutomorphism {
                perm: perm.clone(),
                shift,
            })
        }))
    }
}

impl fmt::Display for CubeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        write!(
            f,
            "perm=[{}] shift={}",
            coords.join(","),
            format_bits(self.shift, self.dim())
        )
    }
}

/// Lexicographic permutations of `0..n`.
struct Permutations {
    next: Option<Vec<u32>>,
}

impl Permutations {
    fn new(n: usize) -> Self {
        Self {
            next: Some((0..n as u32).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut p = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) {
            let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            self.next = Some(p);
        }
        Some(current)
    }
}
