//! Forbidden trees: paths, stars, generalized stars, caterpillars and very
//! generalized stars, with the structural measures used by the bounds.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Placement attempts allowed per cubical-dimension search.
pub const CD_BUDGET: u64 = 200_000_000;

/// The named family a tree was built from, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum TreeFamily {
    /// `P_k`: `k` edges.
    Path { k: usize },
    /// `S_k = K_{1,k}`.
    Star { k: usize },
    /// `GS_{k,m}`: `k` legs of length `m`.
    GenStar { k: usize, m: usize },
    /// `S_{k_1 × ... × k_m}`.
    Caterpillar { degrees: Vec<usize> },
    /// `VGS_{k,m}`; `degrees[i][j]` is the degree of position `j` on leg `i`.
    Vgs { k: usize, m: usize, degrees: Vec<Vec<usize>> },
}

/// A tree on vertices `0..n` stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    family: Option<TreeFamily>,
}

impl Tree {
    /// Builds a tree from an edge list on `n` vertices; rejects cycles and
    /// disconnected inputs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("a tree needs at least one vertex".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::InvalidParameter(format!(
                "{} edges on {n} vertices cannot form a tree",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidParameter(format!("bad tree edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter("repeated tree edge".into()));
            }
        }
        let t = Tree { adj, family: None };
        if t.distances_from(0).iter().any(|d| d.is_none()) {
            return Err(Error::InvalidParameter("edges do not form a connected tree".into()));
        }
        Ok(t)
    }

    fn with_family(mut self, family: TreeFamily) -> Self {
        self.family = Some(family);
        self
    }

    pub fn family(&self) -> Option<&TreeFamily> {
        self.family.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub(crate) fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Sizes of the two colour classes of the (unique) proper 2-colouring.
    pub fn bipartition_sizes(&self) -> (usize, usize) {
        let dist = self.distances_from(0);
        let even = dist.iter().filter(|d| d.unwrap() % 2 == 0).count();
        (even, self.adj.len() - even)
    }

    /// The two components of `T - uv`, as `(component containing u,
    /// component containing v)`, each relabelled `0..`.
    pub fn split_at_edge(&self, u: usize, v: usize) -> Result<(Tree, Tree)> {
        if !self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok()) {
            return Err(Error::InvalidParameter(format!("({u}, {v}) is not a tree edge")));
        }
        let side = |root: usize, banned: usize| -> Result<Tree> {
            let mut order = vec![root];
            let mut parent = vec![usize::MAX; self.adj.len()];
            parent[root] = banned;
            let mut i = 0;
            while i < order.len() {
                let x = order[i];
                for &y in &self.adj[x] {
                    if y != parent[x] {
                        parent[y] = x;
                        order.push(y);
                    }
                }
                i += 1;
            }
            let mut index = vec![usize::MAX; self.adj.len()];
            for (i, &x) in order.iter().enumerate() {
                index[x] = i;
            }
            let edges: Vec<(usize, usize)> = order[1..]
                .iter()
                .map(|&x| (index[parent[x]], index[x]))
                .collect();
            Tree::from_edges(order.len(), &edges)
        };
        Ok((side(u, v)?, side(v, u)?))
    }

    /// `T` with leaf `leaf` deleted (labels above `leaf` shift down by one).
    pub fn remove_leaf(&self, leaf: usize) -> Result<Tree> {
        if self.adj.len() < 2 || !self.is_leaf(leaf) {
            return Err(Error::InvalidParameter(format!("{leaf} is not a leaf")));
        }
        let relabel = |x: usize| if x > leaf { x - 1 } else { x };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != leaf && b != leaf)
            .map(|(a, b)| (relabel(a), relabel(b)))
            .collect();
        Tree::from_edges(self.adj.len() - 1, &edges)
    }

    /// Vertices minimising the largest component left after their removal;
    /// the smallest label among them.
    pub fn centroid(&self) -> usize {
        let n = self.adj.len();
        let mut order = vec![0];
        let mut parent = vec![usize::MAX; n];
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for &y in &self.adj[x] {
                if y != parent[x] {
                    parent[y] = x;
                    order.push(y);
                }
            }
            i += 1;
        }
        let mut size = vec![1usize; n];
        for &x in order.iter().rev() {
            if parent[x] != usize::MAX {
                size[parent[x]] += size[x];
            }
        }
        (0..n)
            .min_by_key(|&x| {
                let above = n - size[x];
                let below = self.adj[x]
                    .iter()
                    .filter(|&&y| parent[y] == x)
                    .map(|&y| size[y])
                    .max()
                    .unwrap_or(0);
                (above.max(below), x)
            })
            .unwrap()
    }

    /// `emin`: the minimum over edges `uv` of `max(deg u, deg v)`, with a
    /// minimising edge (ties broken by smallest `(u, v)`).
    pub fn emin(&self) -> Option<(usize, (usize, usize))> {
        self.edges()
            .into_iter()
            .map(|(u, v)| (self.degree(u).max(self.degree(v)), (u, v)))
            .min()
    }

    /// A longest path (diameter path) as a vertex sequence. Among all
    /// diametral pairs `(u, v)`, `u < v`, the lexicographically smallest.
    pub fn diameter_path(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut best: Option<(usize, usize, usize)> = None;
        for u in 0..n {
            let dist = self.distances_from(u);
            for (v, d) in dist.iter().enumerate().skip(u) {
                let d = d.unwrap();
                if best.is_none_or(|(bd, _, _)| d > bd) {
                    best = Some((d, u, v));
                }
            }
        }
        let (_, u, v) = best.unwrap();
        // walk back from v to u along decreasing distance
        let dist = self.distances_from(u);
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            let dx = dist[x].unwrap();
            x = *self.adj[x].iter().find(|&&y| dist[y] == Some(dx - 1)).unwrap();
            path.push(x);
        }
        path.reverse();
        path
    }

    /// Largest distance from any vertex to the diameter path.
    pub fn distance_to_spine(&self) -> usize {
        let spine = self.diameter_path();
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        for &s in &spine {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist.into_iter().max().unwrap_or(0)
    }

    /// Smallest `d` with the tree embeddable in `Q_d` (`0` for one vertex).
    pub fn cubical_dimension(&self) -> Result<u32> {
        crate::embed::cubical_dimension(self, Some(CD_BUDGET))
    }

    /// Compact text form, e.g. `path:5` or `cat:3,4,3`; generic trees render
    /// as `edges:0-1,1-2`.
    pub fn literal(&self) -> String {
        match &self.family {
            Some(TreeFamily::Path { k }) => format!("path:{k}"),
            Some(TreeFamily::Star { k }) => format!("star:{k}"),
            Some(TreeFamily::GenStar { k, m }) => format!("genstar:{k}x{m}"),
            Some(TreeFamily::Caterpillar { degrees }) => format!("cat:{}", join(degrees, ",")),
            Some(TreeFamily::Vgs { k, m, degrees }) => {
                let legs: Vec<String> = degrees.iter().map(|l| join(l, ",")).collect();
                format!("vgs:k={k},m={m},deg={}", legs.join("/"))
            }
            None => {
                let e: Vec<String> = self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
                format!("edges:{}", e.join(","))
            }
        }
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// `P_k`: vertices `0..=k` in order.
pub fn build_path(k: usize) -> Result<Tree> {
    if k == 0 {
        return Err(Error::InvalidParameter("path length must be at least 1".into()));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
    Ok(Tree::from_edges(k + 1, &edges)?.with_family(TreeFamily::Path { k }))
}

/// `S_k`: centre `0`, leaves `1..=k`.
pub fn build_star(k: usize) -> Result<Tree> {
    if k == 0 {
        return Err(Error::InvalidParameter("star needs at least one leaf".into()));
    }
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Ok(Tree::from_edges(k + 1, &edges)?.with_family(TreeFamily::Star { k }))
}

/// `GS_{k,m}`: centre `0`; leg `i` is `1 + i*m ..= (i+1)*m`.
pub fn build_genstar(k: usize, m: usize) -> Result<Tree> {
    if k == 0 || m == 0 {
        return Err(Error::InvalidParameter("generalized star needs k, m >= 1".into()));
    }
    let mut edges = Vec::with_capacity(k * m);
    for leg in 0..k {
        let base = 1 + leg * m;
        edges.push((0, base));
        for p in 1..m {
            edges.push((base + p - 1, base + p));
        }
    }
    Ok(Tree::from_edges(k * m + 1, &edges)?.with_family(TreeFamily::GenStar { k, m }))
}

/// `S_{k_1 × ... × k_m}`: central path `0..m`, then the pendant leaves.
/// Central vertex `i` receives `k_i` minus its number of path neighbours.
pub fn build_caterpillar(degrees: &[usize]) -> Result<Tree> {
    if degrees.is_empty() {
        return Err(Error::InvalidParameter("caterpillar needs a central path".into()));
    }
    if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidParameter(format!(
            "caterpillar central degrees must be at least 2, got {d}"
        )));
    }
    let m = degrees.len();
    let mut edges: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    let mut next = m;
    for (i, &d) in degrees.iter().enumerate() {
        let on_path = usize::from(i > 0) + usize::from(i + 1 < m);
        for _ in on_path..d {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(Tree::from_edges(next, &edges)?.with_family(TreeFamily::Caterpillar {
        degrees: degrees.to_vec(),
    }))
}

/// `VGS_{k,m}` with leg-vertex degrees `degrees[i][j]`.
///
/// Centre `0`; leg vertex `(i, j)` is `1 + i*m + j`; pendant leaves follow.
pub fn build_vgs(k: usize, m: usize, degrees: &[Vec<usize>]) -> Result<Tree> {
    if k == 0 || m == 0 {
        return Err(Error::InvalidParameter("VGS needs k, m >= 1".into()));
    }
    if degrees.len() != k || degrees.iter().any(|l| l.len() != m) {
        return Err(Error::InvalidParameter(format!(
            "VGS degree array must be {k}x{m}"
        )));
    }
    let mut edges = Vec::new();
    let mut next = 1 + k * m;
    for (i, leg) in degrees.iter().enumerate() {
        for (j, &d) in leg.iter().enumerate() {
            let id = 1 + i * m + j;
            let prev = if j == 0 { 0 } else { id - 1 };
            edges.push((prev, id));
            let on_path = 1 + usize::from(j + 1 < m);
            if d < on_path {
                return Err(Error::InvalidParameter(format!(
                    "leg {} position {} needs degree >= {on_path}, got {d}",
                    i + 1,
                    j + 1
                )));
            }
            for _ in on_path..d {
                edges.push((id, next));
                next += 1;
            }
        }
    }
    Ok(Tree::from_edges(next, &edges)?.with_family(TreeFamily::Vgs {
        k,
        m,
        degrees: degrees.to_vec(),
    }))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected an integer, got {x:?}")))
        })
        .collect()
}

fn parse_one(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected an integer, got {s:?}")))
}

impl FromStr for Tree {
    type Err = Error;

    /// Accepts `path:K`, `star:K`, `genstar:KxM`, `cat:K1,K2,...`,
    /// `vgs:k=K,m=M,deg=D` (one degree for every leg vertex) or
    /// `vgs:k=K,m=M,deg=a,b/c,d/...` (one row per leg), and
    /// `edges:0-1,1-2,...`.
    fn from_str(s: &str) -> Result<Tree> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("tree literal {s:?} lacks `family:`")))?;
        match kind.trim() {
            "path" => build_path(parse_one(rest)?),
            "star" => build_star(parse_one(rest)?),
            "genstar" => {
                let (k, m) = rest
                    .split_once('x')
                    .ok_or_else(|| Error::Parse(format!("genstar expects KxM, got {rest:?}")))?;
                build_genstar(parse_one(k)?, parse_one(m)?)
            }
            "cat" => build_caterpillar(&parse_list(rest)?),
            "vgs" => {
                let deg_at = rest
                    .find("deg=")
                    .ok_or_else(|| Error::Parse("vgs literal needs deg=".into()))?;
                let (head, deg) = rest.split_at(deg_at);
                let deg = &deg[4..];
                let mut k = None;
                let mut m = None;
                for part in head.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    match part.split_once('=') {
                        Some(("k", v)) => k = Some(parse_one(v)?),
                        Some(("m", v)) => m = Some(parse_one(v)?),
                        _ => return Err(Error::Parse(format!("unknown vgs field {part:?}"))),
                    }
                }
                let (k, m) = k
                    .zip(m)
                    .ok_or_else(|| Error::Parse("vgs literal needs k= and m=".into()))?;
                let rows: Vec<Vec<usize>> = if deg.contains('/') || deg.contains(',') {
                    deg.split('/').map(parse_list).collect::<Result<_>>()?
                } else {
                    vec![vec![parse_one(deg)?; m]; k]
                };
                build_vgs(k, m, &rows)
            }
            "edges" => {
                let mut edges = Vec::new();
                let mut n = 0;
                for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let (a, b) = part
                        .split_once('-')
                        .ok_or_else(|| Error::Parse(format!("bad edge {part:?}")))?;
                    let (a, b) = (parse_one(a)?, parse_one(b)?);
                    n = n.max(a + 1).max(b + 1);
                    edges.push((a, b));
                }
                Tree::from_edges(n.max(1), &edges)
            }
            other => Err(Error::Parse(format!("unknown tree family {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shape() {
        let p = build_path(3).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.degree_sequence(), vec![1, 2, 2, 1]);
        assert_eq!(p.edge_count(), 3);
    }

    #[test]
    fn star_and_genstar_shapes() {
        let s = build_star(4).unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.degree(0), 4);
        let g = build_genstar(3, 2).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.degree(0), 3);
        let mut seq = g.degree_sequence();
        seq.sort_unstable();
        assert_eq!(seq, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn caterpillar_shapes() {
        let c = build_caterpillar(&[3, 2]).unwrap();
        assert_eq!(c.vertex_count(), 5);
        assert_eq!((c.degree(0), c.degree(1)), (3, 2));
        let c = build_caterpillar(&[3, 4, 3]).unwrap();
        assert_eq!((c.degree(0), c.degree(1), c.degree(2)), (3, 4, 3));
        assert_eq!(c.vertex_count(), 3 + 2 + 2 + 2);
        assert!(build_caterpillar(&[3, 1]).is_err());
        // S_{2x2} is P_3
        let c = build_caterpillar(&[2, 2]).unwrap();
        let mut seq = c.degree_sequence();
        seq.sort_unstable();
        assert_eq!(seq, vec![1, 1, 2, 2]);
    }

    #[test]
    fn vgs_shape() {
        let t = build_vgs(3, 2, &[vec![3, 2], vec![4, 1], vec![2, 3]]).unwrap();
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.degree(1), 3);
        assert_eq!(t.degree(2), 2);
        assert_eq!(t.degree(3), 4);
        assert_eq!(t.degree(4), 1);
        assert_eq!(t.degree(5), 2);
        assert_eq!(t.degree(6), 3);
        assert!(build_vgs(2, 2, &[vec![1, 2], vec![2, 2]]).is_err());
        assert!(build_vgs(2, 2, &[vec![2, 2]]).is_err());
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Tree::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1)]).is_err());
        assert!(build_path(0).is_err());
    }

    #[test]
    fn emin_examples() {
        assert_eq!(build_path(2).unwrap().emin().unwrap().0, 2);
        for k in 1..8 {
            assert_eq!(build_star(k).unwrap().emin().unwrap().0, k);
        }
        let c = build_caterpillar(&[3, 4, 3]).unwrap();
        let (d, (u, v)) = c.emin().unwrap();
        assert_eq!(d, 3);
        // a leaf edge at the first end vertex of the central path
        assert_eq!(u, 0);
        assert!(c.is_leaf(v));
        assert_eq!(build_path(1).unwrap().emin().unwrap().0, 1);
    }

    #[test]
    fn split_and_remove() {
        let p = build_path(5).unwrap();
        let (a, b) = p.split_at_edge(2, 3).unwrap();
        assert_eq!((a.edge_count(), b.edge_count()), (2, 2));
        let s = build_star(3).unwrap();
        let (a, b) = s.split_at_edge(0, 1).unwrap();
        assert_eq!((a.vertex_count(), b.vertex_count()), (3, 1));
        assert!(s.split_at_edge(1, 2).is_err());
        let r = s.remove_leaf(2).unwrap();
        assert_eq!(r.vertex_count(), 3);
        assert_eq!(r.degree(0), 2);
        assert!(s.remove_leaf(0).is_err());
    }

    #[test]
    fn diameter_and_spine_distance() {
        assert_eq!(build_star(3).unwrap().distance_to_spine(), 1);
        assert_eq!(build_path(3).unwrap().distance_to_spine(), 0);
        assert_eq!(build_path(4).unwrap().diameter_path(), vec![0, 1, 2, 3, 4]);
        assert_eq!(build_genstar(3, 2).unwrap().distance_to_spine(), 2);
    }

    #[test]
    fn centroid_of_path_is_middle() {
        assert_eq!(build_path(4).unwrap().centroid(), 2);
        assert_eq!(build_star(5).unwrap().centroid(), 0);
    }

    #[test]
    fn literals_round_trip() {
        for lit in ["path:5", "star:4", "genstar:3x2", "cat:3,4,3", "vgs:k=2,m=2,deg=3,3/4,2"] {
            let t: Tree = lit.parse().unwrap();
            assert_eq!(t.literal(), lit);
        }
        let t: Tree = "vgs:k=2,m=2,deg=3".parse().unwrap();
        assert_eq!(t.literal(), "vgs:k=2,m=2,deg=3,3/3,3");
        let t: Tree = "edges:0-1,1-2".parse().unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert!("blob:3".parse::<Tree>().is_err());
        assert!("path".parse::<Tree>().is_err());
        assert!("cat:3,x".parse::<Tree>().is_err());
    }

    #[test]
    fn bipartition() {
        assert_eq!(build_star(4).unwrap().bipartition_sizes(), (1, 4));
        assert_eq!(build_path(4).unwrap().bipartition_sizes(), (3, 2));
    }
}
