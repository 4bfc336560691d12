//! Perfect matchings in regular bipartite cube subgraphs, regular-subgraph
//! extraction, and degree raising by bipartite b-matching.
//!
//! Every subgraph of `Q_n` is bipartite with the even-weight vertices on one
//! side, so the parity of a vertex fixes its side throughout.

use crate::cube::{CubeSubgraph, Edge};
use crate::error::{Error, Result};

/// Dinic max-flow with an iterative augmenting search.
struct Flow {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add(&mut self, a: usize, b: usize, cap: u32) -> usize {
        let id = self.to.len();
        self.head[a].push(id);
        self.to.push(b);
        self.cap.push(cap);
        self.head[b].push(id + 1);
        self.to.push(a);
        self.cap.push(0);
        id
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.head[v] {
                let w = self.to[e];
                if self.cap[e] > 0 && self.level[w] < 0 {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] >= 0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            let mut path: Vec<usize> = Vec::new();
            let mut v = s;
            loop {
                if v == t {
                    let f = path.iter().map(|&e| self.cap[e]).min().unwrap();
                    for &e in &path {
                        self.cap[e] -= f;
                        self.cap[e ^ 1] += f;
                    }
                    total += u64::from(f);
                    path.clear();
                    v = s;
                    continue;
                }
                let mut advanced = false;
                while self.iter[v] < self.head[v].len() {
                    let e = self.head[v][self.iter[v]];
                    let w = self.to[e];
                    if self.cap[e] > 0 && self.level[w] == self.level[v] + 1 {
                        path.push(e);
                        v = w;
                        advanced = true;
                        break;
                    }
                    self.iter[v] += 1;
                }
                if advanced {
                    continue;
                }
                if v == s {
                    break;
                }
                self.level[v] = -1;
                let e = path.pop().unwrap();
                v = self.to[e ^ 1];
                self.iter[v] += 1;
            }
        }
        total
    }
}

/// Assigns dense indices to the vertices of `g` with positive degree,
/// even-weight first, each side in increasing order.
fn sides(g: &CubeSubgraph) -> (Vec<u32>, Vec<u32>) {
    let active = (0..g.order() as u32).filter(|&v| g.degree(v) > 0);
    active.partition(|v| v.count_ones() % 2 == 0)
}

/// A perfect matching of the non-isolated vertices of `g`, found by
/// augmenting paths with vertices scanned in increasing order.
pub fn perfect_matching(g: &CubeSubgraph) -> Result<Vec<Edge>> {
    let (even, odd) = sides(g);
    if even.len() != odd.len() {
        return Err(Error::Infeasible(format!(
            "sides of size {} and {} admit no perfect matching",
            even.len(),
            odd.len()
        )));
    }
    let n = g.order();
    let (s, t) = (n, n + 1);
    let mut flow = Flow::new(n + 2);
    let mut arcs = Vec::new();
    for &v in &even {
        flow.add(s, v as usize, 1);
        for w in g.neighbors(v) {
            arcs.push((flow.add(v as usize, w as usize, 1), v, w));
        }
    }
    for &w in &odd {
        flow.add(w as usize, t, 1);
    }
    if flow.max_flow(s, t) != even.len() as u64 {
        return Err(Error::Infeasible("no perfect matching exists".into()));
    }
    let mut out: Vec<Edge> = arcs
        .into_iter()
        .filter(|&(id, _, _)| flow.cap[id] == 0)
        .map(|(_, v, w)| Edge::new(v, w))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    Ok(out)
}

/// An `r`-regular spanning subgraph of the `k`-regular graph `g`, obtained
/// by deleting `k - r` successive perfect matchings. Isolated vertices are
/// ignored, so a regular graph on a vertex subset is accepted.
///
/// Outputs are nested: the result for `r - 1` is contained in the result
/// for `r`.
pub fn extract_regular(g: &CubeSubgraph, r: u32) -> Result<CubeSubgraph> {
    let k = (0..g.order() as u32).map(|v| g.degree(v)).max().unwrap_or(0);
    if (0..g.order() as u32).any(|v| g.degree(v) != 0 && g.degree(v) != k) {
        return Err(Error::InvalidParameter("input graph is not regular".into()));
    }
    if r > k {
        return Err(Error::InvalidParameter(format!(
            "cannot extract a {r}-regular subgraph from a {k}-regular graph"
        )));
    }
    let mut h = g.clone();
    for _ in r..k {
        for e in perfect_matching(&h)? {
            h.remove_edge(e)?;
        }
    }
    Ok(h)
}

/// Adds `mandatory` and then further `candidates` to `h` so that every
/// vertex of `targets` has degree exactly `r`.
///
/// Candidates must join two targets. Edges already in `h` are skipped.
/// Returns [`Error::Infeasible`] when no selection of candidates meets the
/// demand, including when a target already exceeds degree `r`.
pub fn raise_to_degree(
    h: &CubeSubgraph,
    candidates: &[Edge],
    targets: &[u32],
    r: u32,
    mandatory: &[Edge],
) -> Result<CubeSubgraph> {
    let n = h.order();
    let mut is_target = vec![false; n];
    for &v in targets {
        h.check_vertex(v)?;
        is_target[v as usize] = true;
    }
    for e in candidates.iter().chain(mandatory) {
        h.check_vertex(e.hi())?;
        if !is_target[e.lo() as usize] || !is_target[e.hi() as usize] {
            return Err(Error::InvalidParameter(format!(
                "candidate edge {} leaves the target set",
                e.render(h.dim())
            )));
        }
    }
    let mut out = h.clone();
    for &e in mandatory {
        out.add_edge(e)?;
    }
    let mut demand = vec![0u32; n];
    let (mut even_total, mut odd_total) = (0u64, 0u64);
    for v in 0..n as u32 {
        if !is_target[v as usize] {
            continue;
        }
        let d = out.degree(v);
        if d > r {
            return Err(Error::Infeasible(format!(
                "vertex {} already has degree {d} > {r}",
                crate::cube::format_bits(v, h.dim())
            )));
        }
        demand[v as usize] = r - d;
        if v.count_ones() % 2 == 0 {
            even_total += u64::from(r - d);
        } else {
            odd_total += u64::from(r - d);
        }
    }
    if even_total != odd_total {
        return Err(Error::Infeasible(format!(
            "even side needs {even_total} edge ends, odd side needs {odd_total}"
        )));
    }
    if even_total == 0 {
        return Ok(out);
    }
    let mut pool: Vec<Edge> = candidates.iter().copied().filter(|&e| !out.has_edge(e)).collect();
    pool.sort_unstable();
    pool.dedup();
    let (s, t) = (n, n + 1);
    let mut flow = Flow::new(n + 2);
    for v in 0..n {
        if demand[v] > 0 {
            if (v as u32).count_ones() % 2 == 0 {
                flow.add(s, v, demand[v]);
            } else {
                flow.add(v, t, demand[v]);
            }
        }
    }
    let mut arcs = Vec::with_capacity(pool.len());
    for e in pool {
        let (a, b) = e.endpoints();
        let (even, odd) = if a.count_ones() % 2 == 0 { (a, b) } else { (b, a) };
        if demand[even as usize] > 0 && demand[odd as usize] > 0 {
            arcs.push((flow.add(even as usize, odd as usize, 1), e));
        }
    }
    if flow.max_flow(s, t) != even_total {
        return Err(Error::Infeasible(format!(
            "candidates cannot raise every target to degree {r}"
        )));
    }
    for (id, e) in arcs {
        if flow.cap[id] == 0 {
            out.add_edge(e)?;
        }
    }
    Ok(out)
}
