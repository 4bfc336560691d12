//! Text formats: the `dim=n` edge list, DOT export and vertex lists.

use std::fmt::Write as _;

use crate::cube::{format_bits, parse_bits, CubeSubgraph, Edge};
use crate::error::{Error, Result};

/// Header line `dim=n`, then one `u v` line per edge (binary strings,
/// `u < v`), lines in lexicographic order.
pub fn write_edge_list(g: &CubeSubgraph) -> String {
    let mut out = format!("dim={}\n", g.dim());
    for e in g.edges() {
        out.push_str(&e.render(g.dim()));
        out.push('\n');
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<CubeSubgraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let dim: u32 = header
        .strip_prefix("dim=")
        .ok_or_else(|| Error::Parse(format!("expected `dim=n` header, got {header:?}")))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension in header {header:?}")))?;
    let mut g = CubeSubgraph::empty(dim)?;
    for (lineno, line) in lines.enumerate() {
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 2)));
        };
        let (u, du) = parse_bits(a)?;
        let (v, dv) = parse_bits(b)?;
        if du != dim || dv != dim {
            return Err(Error::Parse(format!(
                "line {}: vertex length does not match dim={dim}",
                lineno + 2
            )));
        }
        g.add_edge(Edge::new(u, v)?)?;
    }
    Ok(g)
}

/// Undirected DOT graph with every vertex declared by its binary label.
pub fn write_dot(g: &CubeSubgraph, name: &str) -> String {
    let dim = g.dim();
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{name}\" {{");
    for v in 0..g.order() as u32 {
        let _ = writeln!(out, "  \"{}\";", format_bits(v, dim));
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\";",
            format_bits(e.lo(), dim),
            format_bits(e.hi(), dim)
        );
    }
    out.push_str("}\n");
    out
}

/// One binary string per line, sorted.
pub fn write_vertex_list(vertices: &[u32], dim: u32) -> String {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    let mut out = String::new();
    for v in sorted {
        out.push_str(&format_bits(v, dim));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::full_cube;

    #[test]
    fn edge_list_layout() {
        let q2 = full_cube(2).unwrap();
        assert_eq!(write_edge_list(&q2), "dim=2\n00 01\n00 10\n01 11\n10 11\n");
    }

    #[test]
    fn edge_list_round_trip() {
        let q3 = full_cube(3).unwrap();
        let mut g = q3.clone();
        g.isolate(0);
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("dim=3\n000 011\n").is_err());
        assert!(parse_edge_list("dim=3\n000 01\n").is_err());
        assert!(parse_edge_list("3\n000 001\n").is_err());
        assert!(parse_edge_list("dim=3\n000\n").is_err());
    }

    #[test]
    fn dot_lists_all_vertices() {
        let g = CubeSubgraph::empty(2).unwrap();
        let dot = write_dot(&g, "h");
        assert!(dot.contains("\"00\";") && dot.contains("\"11\";"));
        assert!(!dot.contains("--"));
        let dot = write_dot(&full_cube(2).unwrap(), "q2");
        assert_eq!(dot.matches("--").count(), 4);
    }
}
