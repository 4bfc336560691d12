//! Hamming codes, translated codes and perfect dominating sets made of
//! disjoint subcubes.

use serde::Serialize;

use crate::cube::{check_dim, format_bits, CubeSubgraph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CodeKind {
    Hamming,
    TranslatedHamming,
    Weichsel { subcube_dim: u32 },
}

/// A vertex set of `Q_dim`; `members` is kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingSet {
    dim: u32,
    members: Vec<u32>,
    kind: CodeKind,
}

impl DominatingSet {
    /// Wraps an arbitrary vertex set, e.g. for checking candidate sets.
    pub fn from_members(dim: u32, mut members: Vec<u32>, kind: CodeKind) -> Result<Self> {
        check_dim(dim)?;
        if let Some(&bad) = members.iter().find(|&&m| u64::from(m) >= 1u64 << dim) {
            return Err(Error::InvalidParameter(format!(
                "member {bad:#b} outside Q_{dim}"
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { dim, members, kind })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Membership table indexed by vertex.
    pub fn indicator(&self) -> Vec<bool> {
        let mut ind = vec![false; 1 << self.dim];
        for &m in &self.members {
            ind[m as usize] = true;
        }
        ind
    }

    /// Smallest Hamming distance between two distinct members.
    pub fn min_distance(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                let d = (a ^ b).count_ones();
                best = Some(best.map_or(d, |x| x.min(d)));
            }
        }
        best
    }

    pub fn render(&self) -> Vec<String> {
        self.members.iter().map(|&m| format_bits(m, self.dim)).collect()
    }
}

/// Codewords of the length-`2^i - 1` Hamming code, `1 <= i <= 4`.
///
/// Column `j` (1-based) of the parity-check matrix is the `i`-bit binary
/// representation of `j`, so the syndrome of `x` is the XOR of the indices
/// of its one-coordinates.
pub(crate) fn hamming_words(i: u32) -> Vec<u32> {
    let n = (1u32 << i) - 1;
    (0..1u32 << n).filter(|&x| syndrome(x, n) == 0).collect()
}

/// XOR of the (1-based) coordinates set in `x`.
pub(crate) fn syndrome(x: u32, n: u32) -> u32 {
    let mut s = 0;
    for coord in 1..=n {
        if x >> (n - coord) & 1 == 1 {
            s ^= coord;
        }
    }
    s
}

/// The Hamming code in `Q_{2^i - 1}` for `2 <= i <= 4`.
pub fn hamming_code(i: u32) -> Result<DominatingSet> {
    if !(2..=4).contains(&i) {
        return Err(Error::InvalidParameter(format!(
            "Hamming code index {i} outside 2..=4"
        )));
    }
    DominatingSet::from_members((1 << i) - 1, hamming_words(i), CodeKind::Hamming)
}

/// `C + v`: every member XOR-shifted by `v`.
pub fn translate(code: &DominatingSet, v: Vertex) -> Result<DominatingSet> {
    if v.dim() != code.dim {
        return Err(Error::DimensionMismatch {
            expected: code.dim,
            found: v.dim(),
        });
    }
    let kind = match code.kind {
        CodeKind::Hamming | CodeKind::TranslatedHamming => CodeKind::TranslatedHamming,
        k @ CodeKind::Weichsel { .. } => k,
    };
    let members = code.members.iter().map(|&m| m ^ v.bits()).collect();
    DominatingSet::from_members(code.dim, members, kind)
}

/// A perfect dominating set of `Q_n` inducing disjoint copies of `Q_r`,
/// `r = n - (2^s - 1)`.
///
/// Built as `C_0 × {0,1}^r` where `C_0` is the Hamming code in
/// `Q_{2^s - 1}` on coordinates `1..=2^s - 1` and the `Q_r` factor takes the
/// remaining (low) coordinates.
pub fn weichsel_pds(n: u32, s: u32) -> Result<DominatingSet> {
    if !(1..=4).contains(&s) || n > 20 {
        return Err(Error::InvalidParameter(format!(
            "weichsel set needs 1 <= s <= 4 and n <= 20, got n={n}, s={s}"
        )));
    }
    let block = (1u32 << s) - 1;
    if n < block {
        return Err(Error::InvalidParameter(format!(
            "n={n} is smaller than the code length 2^{s}-1={block}"
        )));
    }
    check_dim(n)?;
    let r = n - block;
    let mut members = Vec::with_capacity(hamming_words(s).len() << r);
    for c in hamming_words(s) {
        for y in 0..1u32 << r {
            members.push((c << r) | y);
        }
    }
    DominatingSet::from_members(n, members, CodeKind::Weichsel { subcube_dim: r })
}

/// Outcome of [`verify_pds`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PdsReport {
    pub pass: bool,
    pub members: usize,
    /// Non-members with exactly one member neighbor.
    pub dominated: usize,
    /// Non-members with no member neighbor.
    pub undominated: Vec<String>,
    /// Non-members with two or more member neighbors.
    pub over_dominated: Vec<String>,
    /// Connected components of the subgraph induced on the members.
    pub components: usize,
    /// Dimension of each component when it is a subcube (sorted), `None` if
    /// some component is not a subcube.
    pub component_dims: Option<Vec<u32>>,
    /// Expected component count `2^{n-r}/(n-r+1)` for weichsel sets.
    pub expected_components: Option<usize>,
}

/// Checks that every vertex of `host` is in `set` or adjacent to exactly one
/// member, and describes the induced subgraph on `set`.
pub fn verify_pds(set: &DominatingSet, host: &CubeSubgraph) -> Result<PdsReport> {
    if host.dim() != set.dim {
        return Err(Error::DimensionMismatch {
            expected: set.dim,
            found: host.dim(),
        });
    }
    let dim = set.dim;
    let ind = set.indicator();
    let mut dominated = 0;
    let mut undominated = Vec::new();
    let mut over = Vec::new();
    for v in 0..host.order() as u32 {
        if ind[v as usize] {
            continue;
        }
        match host.neighbors(v).filter(|&u| ind[u as usize]).count() {
            0 => undominated.push(format_bits(v, dim)),
            1 => dominated += 1,
            _ => over.push(format_bits(v, dim)),
        }
    }

    // Components of the induced subgraph, each tested for being a subcube.
    let mut seen = vec![false; host.order()];
    let mut components = 0;
    let mut dims = Some(Vec::new());
    for &start in &set.members {
        if seen[start as usize] {
            continue;
        }
        components += 1;
        seen[start as usize] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(x) = stack.pop() {
            comp.push(x);
            for y in host.neighbors(x) {
                if ind[y as usize] && !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        let spread = comp.iter().fold(0, |acc, &x| acc | (x ^ start));
        let d = spread.count_ones();
        let is_subcube = comp.len() == 1usize << d
            && comp.iter().all(|&x| host.neighbors(x).filter(|&y| ind[y as usize]).count() == d as usize);
        match (&mut dims, is_subcube) {
            (Some(v), true) => v.push(d),
            _ => dims = None,
        }
    }
    if let Some(v) = dims.as_mut() {
        v.sort_unstable();
    }
    let weichsel_dim = match set.kind {
        CodeKind::Weichsel { subcube_dim } => Some(subcube_dim),
        _ => None,
    };
    let expected_components = weichsel_dim.map(|r| {
        let t = dim - r;
        (1usize << t) / (t as usize + 1)
    });
    let structure_ok = match weichsel_dim {
        None => true,
        Some(r) => {
            expected_components == Some(components)
                && dims.as_ref().is_some_and(|d| d.iter().all(|&x| x == r))
        }
    };
    let pass = undominated.is_empty() && over.is_empty() && structure_ok;
    Ok(PdsReport {
        pass,
        members: set.members.len(),
        dominated,
        undominated,
        over_dominated: over,
        components,
        component_dims: dims,
        expected_components,
    })
}
