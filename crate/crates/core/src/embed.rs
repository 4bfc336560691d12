//! Backtracking search for copies of a tree inside a cube subgraph.
//!
//! The non-leaf vertices (plus any pinned vertex) form a subtree, the
//! skeleton. It is mapped first in DFS order, each vertex onto a free host
//! neighbour of its parent's image. Leaves are placed last by bipartite
//! matching against the free neighbours of their parents' images.

use std::collections::HashMap;

use crate::cube::{CubeSubgraph, Edge};
use crate::error::{Error, Result};
use crate::tree::Tree;

const NONE: u32 = u32::MAX;

/// A cube subgraph, optionally with one extra edge added on the fly.
#[derive(Clone, Copy, Debug)]
pub struct HostView<'a> {
    graph: &'a CubeSubgraph,
    extra: Option<Edge>,
}

impl<'a> HostView<'a> {
    pub fn new(graph: &'a CubeSubgraph) -> Self {
        HostView { graph, extra: None }
    }

    pub fn with_extra(graph: &'a CubeSubgraph, extra: Edge) -> Self {
        HostView {
            graph,
            extra: Some(extra),
        }
    }

    #[inline]
    fn mask(&self, v: u32) -> u32 {
        let mut m = self.graph.dir_mask(v);
        if let Some(e) = self.extra {
            if v == e.lo() || v == e.hi() {
                m |= 1 << e.direction();
            }
        }
        m
    }

    fn order(&self) -> usize {
        self.graph.order()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Give up after this many placement attempts.
    pub budget: Option<u64>,
    /// Host is a full cube: fix the root at `0` and introduce new
    /// directions in increasing order along the skeleton.
    pub canonical: bool,
}

struct Plan {
    order: Vec<usize>,
    parent: Vec<usize>,
    leaves: Vec<(usize, usize)>,
}

/// A tree prepared for repeated embedding searches.
#[derive(Clone, Debug)]
pub struct Embedder {
    tree: Tree,
    degree: Vec<u32>,
    centroid: usize,
    edge_pins: Vec<(usize, usize)>,
}

impl Embedder {
    pub fn new(tree: &Tree) -> Self {
        let degree: Vec<u32> = tree.degree_sequence().iter().map(|&d| d as u32).collect();
        // Oriented edges (a, b). Leaf edges at the same parent are
        // interchangeable, so one per (parent, orientation) suffices.
        let mut edge_pins = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut oriented: Vec<(usize, usize)> = tree
            .edges()
            .into_iter()
            .flat_map(|(a, b)| [(a, b), (b, a)])
            .collect();
        // Pins that fix high-degree vertices prune hardest; try them first.
        oriented.sort_by_key(|&(a, b)| {
            (std::cmp::Reverse(degree[a].max(degree[b])), a, b)
        });
        for (a, b) in oriented {
            let key = if tree.is_leaf(b) && !tree.is_leaf(a) {
                Some((a, true))
            } else if tree.is_leaf(a) && !tree.is_leaf(b) {
                Some((b, false))
            } else {
                None
            };
            if key.is_none_or(|k| seen.insert(k)) {
                edge_pins.push((a, b));
            }
        }
        Embedder {
            centroid: tree.centroid(),
            tree: tree.clone(),
            degree,
            edge_pins,
        }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    /// Oriented tree edges `(a, b)` worth pinning onto an added host edge.
    pub fn edge_pins(&self) -> &[(usize, usize)] {
        &self.edge_pins
    }

    fn plan(&self, pins: &[(usize, u32)]) -> Plan {
        let n = self.tree.vertex_count();
        let pinned: Vec<usize> = pins.iter().map(|p| p.0).collect();
        let mut in_skel: Vec<bool> = (0..n).map(|v| !self.tree.is_leaf(v)).collect();
        for &p in &pinned {
            in_skel[p] = true;
        }
        let start = if let Some(&p) = pinned.first() {
            p
        } else if in_skel[self.centroid] {
            self.centroid
        } else {
            0
        };
        in_skel[start] = true;
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![usize::MAX; n];
        let mut stack = vec![start];
        let mut visited = vec![false; n];
        visited[start] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            let mut kids: Vec<usize> = self
                .tree
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| in_skel[w] && !visited[w])
                .collect();
            // The stack pops last-pushed first, so push in reverse priority.
            kids.sort_by_key(|&w| {
                (
                    !pinned.contains(&w),
                    std::cmp::Reverse(self.degree[w]),
                    w,
                )
            });
            for &w in kids.iter().rev() {
                visited[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
        let mut leaves = Vec::new();
        for v in 0..n {
            if !in_skel[v] {
                let p = self.tree.neighbors(v)[0];
                parent[v] = p;
                leaves.push((v, p));
            }
        }
        Plan {
            order,
            parent,
            leaves,
        }
    }

    /// Finds an injective map of the tree into `host` respecting `pins`
    /// (tree vertex, host vertex). Returns the image of every tree vertex.
    pub fn find(
        &self,
        host: HostView<'_>,
        pins: &[(usize, u32)],
        opts: &SearchOptions,
    ) -> Result<Option<Vec<u32>>> {
        let n = self.tree.vertex_count();
        if n > host.order() {
            return Ok(None);
        }
        for &(t, h) in pins {
            if t >= n || h as usize >= host.order() {
                return Err(Error::InvalidParameter(format!("pin ({t}, {h}) out of range")));
            }
        }
        let plan = self.plan(pins);
        let mut pin_of = vec![NONE; n];
        for &(t, h) in pins {
            pin_of[t] = h;
        }
        let mut s = Search {
            e: self,
            plan: &plan,
            host,
            pin_of,
            owner: vec![NONE; host.order()],
            image: vec![NONE; n],
            pending: self.degree.clone(),
            nodes: 0,
            budget: opts.budget.unwrap_or(u64::MAX),
            canonical: opts.canonical,
            dirs_used: 0,
        };
        if s.place(0)? {
            Ok(Some(s.image))
        } else {
            Ok(None)
        }
    }
}

struct Search<'a> {
    e: &'a Embedder,
    plan: &'a Plan,
    host: HostView<'a>,
    pin_of: Vec<u32>,
    owner: Vec<u32>,
    image: Vec<u32>,
    pending: Vec<u32>,
    nodes: u64,
    budget: u64,
    canonical: bool,
    dirs_used: u32,
}

impl Search<'_> {
    #[inline]
    fn free_neighbors(&self, h: u32) -> u32 {
        let mut m = self.host.mask(h);
        let mut c = 0;
        while m != 0 {
            let b = m.trailing_zeros();
            m &= m - 1;
            if self.owner[(h ^ (1 << b)) as usize] == NONE {
                c += 1;
            }
        }
        c
    }

    fn feasible_after(&self, y: usize, h: u32) -> bool {
        if self.free_neighbors(h) < self.pending[y] {
            return false;
        }
        let mut m = self.host.mask(h);
        while m != 0 {
            let b = m.trailing_zeros();
            m &= m - 1;
            let z = h ^ (1 << b);
            let x = self.owner[z as usize];
            if x != NONE && self.free_neighbors(z) < self.pending[x as usize] {
                return false;
            }
        }
        true
    }

    fn place(&mut self, idx: usize) -> Result<bool> {
        if idx == self.plan.order.len() {
            return Ok(self.place_leaves());
        }
        let y = self.plan.order[idx];
        let p = self.plan.parent[y];
        let need = self.e.degree[y];
        let candidates: Vec<u32> = if self.pin_of[y] != NONE {
            let h = self.pin_of[y];
            let d = if p == usize::MAX { 0 } else { h ^ self.image[p] };
            if p != usize::MAX && (d.count_ones() != 1 || self.host.mask(h) & d == 0) {
                return Ok(false);
            }
            vec![h]
        } else if p != usize::MAX {
            let ph = self.image[p];
            let mut m = self.host.mask(ph);
            if self.canonical {
                // only old directions or the next new one
                m &= (1u32 << (self.dirs_used + 1)) - 1;
            }
            let mut c = Vec::with_capacity(m.count_ones() as usize);
            while m != 0 {
                let b = m.trailing_zeros();
                m &= m - 1;
                c.push(ph ^ (1 << b));
            }
            c
        } else if self.canonical {
            vec![0]
        } else {
            (0..self.host.order() as u32).collect()
        };
        for h in candidates {
            if self.owner[h as usize] != NONE || self.host.mask(h).count_ones() < need {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(format!(
                    "embedding search passed {} nodes",
                    self.budget
                )));
            }
            let old_dirs = self.dirs_used;
            if p != usize::MAX {
                let b = (h ^ self.image[p]).trailing_zeros();
                if b + 1 > self.dirs_used {
                    self.dirs_used = b + 1;
                }
                self.pending[p] -= 1;
            }
            self.owner[h as usize] = y as u32;
            self.image[y] = h;
            if p != usize::MAX {
                self.pending[y] -= 1;
            }
            if self.feasible_after(y, h) && self.place(idx + 1)? {
                return Ok(true);
            }
            if p != usize::MAX {
                self.pending[y] += 1;
                self.pending[p] += 1;
            }
            self.owner[h as usize] = NONE;
            self.image[y] = NONE;
            self.dirs_used = old_dirs;
        }
        Ok(false)
    }

    /// Kuhn matching of the leaves onto free neighbours of their parents.
    fn place_leaves(&mut self) -> bool {
        let leaves = &self.plan.leaves;
        if leaves.is_empty() {
            return true;
        }
        let cand: Vec<Vec<u32>> = leaves
            .iter()
            .map(|&(_, p)| {
                let ph = self.image[p];
                let mut m = self.host.mask(ph);
                let mut c = Vec::new();
                while m != 0 {
                    let b = m.trailing_zeros();
                    m &= m - 1;
                    let z = ph ^ (1 << b);
                    if self.owner[z as usize] == NONE {
                        c.push(z);
                    }
                }
                c
            })
            .collect();
        let mut taken: HashMap<u32, usize> = HashMap::new();
        for i in 0..leaves.len() {
            let mut seen = Vec::new();
            if !augment(i, &cand, &mut taken, &mut seen) {
                return false;
            }
        }
        for (h, i) in taken {
            self.image[leaves[i].0] = h;
        }
        true
    }
}

fn augment(i: usize, cand: &[Vec<u32>], taken: &mut HashMap<u32, usize>, seen: &mut Vec<u32>) -> bool {
    for &h in &cand[i] {
        if seen.contains(&h) {
            continue;
        }
        seen.push(h);
        match taken.get(&h).copied() {
            None => {
                taken.insert(h, i);
                return true;
            }
            Some(j) => {
                if augment(j, cand, taken, seen) {
                    taken.insert(h, i);
                    return true;
                }
            }
        }
    }
    false
}

/// Checks that `image` is an injective homomorphism of `tree` into `host`.
pub fn is_embedding(tree: &Tree, host: HostView<'_>, image: &[u32]) -> bool {
    if image.len() != tree.vertex_count() || image.iter().any(|&h| h as usize >= host.order()) {
        return false;
    }
    let mut sorted = image.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    tree.edges().iter().all(|&(a, b)| {
        let d = image[a] ^ image[b];
        d.count_ones() == 1 && host.mask(image[a]) & d != 0
    })
}

/// Smallest `d` such that the tree embeds in `Q_d`; a single vertex has
/// dimension `0`.
pub fn cubical_dimension(tree: &Tree, budget: Option<u64>) -> Result<u32> {
    let n = tree.vertex_count();
    if n == 1 {
        return Ok(0);
    }
    if n > 64 {
        return Err(Error::BudgetExceeded(format!("{n} tree vertices exceed the search limit of 64")));
    }
    let log = usize::BITS - (n - 1).leading_zeros();
    let (a, b) = tree.bipartition_sizes();
    let embedder = Embedder::new(tree);
    let opts = SearchOptions {
        budget,
        canonical: true,
    };
    let mut d = log.max(tree.max_degree() as u32).max(1);
    loop {
        if d > crate::cube::MAX_DIM {
            return Err(Error::BudgetExceeded("tree needs more than the largest cube".into()));
        }
        let half = 1usize << (d - 1);
        if a <= half && b <= half {
            let q = crate::cube::full_cube(d)?;
            if embedder.find(HostView::new(&q), &[], &opts)?.is_some() {
                return Ok(d);
            }
        }
        d += 1;
    }
}
