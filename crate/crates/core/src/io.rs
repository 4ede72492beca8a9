//! Text formats: edge lists, orderings, color grids and Latin CSV.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! order: 0 3 1 2
//! ```
//!
//! The header gives the vertex and edge counts; vertices are 0-based.
//! The `order:` line is optional. Latin CSV has one row per line with
//! 1-based entries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gds::{GdsCertificate, SearchStats};
use crate::graph::{Graph, OrderedGraph, ProductGraph, VertexOrder};
use crate::latin::{LatinRectangle, TensorDefiningSet};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{tok}`")))
}

/// Splits on whitespace and commas.
fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
}

/// Content lines with their 1-based line numbers; blank lines and `#`
/// comments are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses an edge list into an ordered graph (natural order unless an
/// `order:` line is present).
pub fn parse_edge_list(text: &str) -> Result<OrderedGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let head: Vec<&str> = tokens(header).collect();
    if head.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n = parse_usize(head[0], hline)?;
    let m = parse_usize(head[1], hline)?;
    let mut g = Graph::new(n).map_err(|e| parse_err(hline, e.to_string()))?;
    let mut edges = 0;
    let mut order = None;
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("order:") {
            if order.is_some() {
                return Err(parse_err(ln, "duplicate `order:` line"));
            }
            let scan = tokens(rest).map(|t| parse_usize(t, ln)).collect::<Result<Vec<_>>>()?;
            order = Some(VertexOrder::from_scan(scan).map_err(|e| parse_err(ln, e.to_string()))?);
            continue;
        }
        let t: Vec<&str> = tokens(line).collect();
        if t.len() != 2 {
            return Err(parse_err(ln, format!("expected `u v`, found `{line}`")));
        }
        let (u, v) = (parse_usize(t[0], ln)?, parse_usize(t[1], ln)?);
        g.add_edge(u, v).map_err(|e| parse_err(ln, e.to_string()))?;
        edges += 1;
    }
    if edges != m {
        return Err(parse_err(hline, format!("header promises {m} edges, found {edges}")));
    }
    match order {
        Some(o) => OrderedGraph::new(g, o),
        None => Ok(OrderedGraph::natural(g)),
    }
}

pub fn write_edge_list(g: &OrderedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.graph.edge_count());
    for (u, v) in g.graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    let scan: Vec<String> = g.order.scan().iter().map(usize::to_string).collect();
    out.push_str(&format!("order: {}\n", scan.join(" ")));
    out
}

/// A permutation of `0..n`, separated by whitespace or commas; an optional
/// `order:` prefix is accepted.
pub fn parse_order(text: &str, n: usize) -> Result<VertexOrder> {
    let mut scan = Vec::with_capacity(n);
    for (ln, line) in content_lines(text) {
        let line = line.strip_prefix("order:").unwrap_or(line);
        for t in tokens(line) {
            scan.push(parse_usize(t, ln)?);
        }
    }
    if scan.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "expected {n} vertices, found {}",
            scan.len()
        )));
    }
    VertexOrder::from_scan(scan)
}

/// One line per row, 1-based entries separated by commas or whitespace.
pub fn parse_grid(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut rows = Vec::new();
    for (ln, line) in content_lines(text) {
        let line = line.strip_prefix("colors:").unwrap_or(line);
        let row = tokens(line)
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| parse_err(ln, format!("expected a positive integer, found `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first().map(Vec::len) {
            if row.len() != first {
                return Err(parse_err(
                    ln,
                    format!("row has {} entries, expected {first}", row.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(1, "empty grid"));
    }
    Ok(rows)
}

pub fn parse_latin_csv(text: &str) -> Result<LatinRectangle> {
    LatinRectangle::from_rows(&parse_grid(text)?)
}

pub fn grid_csv(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

/// Colors of a product coloring as rows indexed by the first factor.
pub fn color_grid(product: &ProductGraph, colors: &[u32]) -> Vec<Vec<u32>> {
    let (_, n_h) = product.dims();
    colors.chunks(n_h.max(1)).map(<[u32]>::to_vec).collect()
}

/// `row,col,entry` triples, 0-based positions, 1-based entries.
pub fn defining_set_csv(set: &TensorDefiningSet, l: &LatinRectangle) -> String {
    set.positions
        .iter()
        .map(|&(i, j)| format!("{i},{j},{}\n", l.get(i, j)))
        .collect()
}

/// Serialized GDS certificate on a product of `n_h` columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub vertices: Vec<[usize; 2]>,
    pub colors: Vec<u32>,
    pub k: u32,
    pub verified: bool,
    pub method: String,
    pub search_stats: SearchStats,
}

impl CertificateRecord {
    pub fn new(cert: &GdsCertificate, n_h: usize) -> Self {
        Self {
            vertices: cert.domain.iter().map(|&v| [v / n_h, v % n_h]).collect(),
            colors: cert.domain.iter().map(|&v| cert.target.color(v)).collect(),
            k: cert.k,
            verified: cert.verified,
            method: cert.method.name().to_string(),
            search_stats: cert.stats.clone(),
        }
    }

    /// `row,col,entry` triples.
    pub fn to_csv(&self) -> String {
        self.vertices
            .iter()
            .zip(&self.colors)
            .map(|([i, j], c)| format!("{i},{j},{c}\n"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;
    use crate::latin::{tensor_defining_set, tensor_square};

    #[test]
    fn edge_list_round_trip() {
        let g = OrderedGraph::new(
            path_graph(4).unwrap(),
            VertexOrder::from_scan(vec![0, 3, 1, 2]).unwrap(),
        )
        .unwrap();
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_comments_and_natural_order() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # last\n0 2\n").unwrap();
        assert!(g.graph.is_complete());
        assert_eq!(g.order, VertexOrder::identity(3));
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let e = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_edge_list("3 2\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_edge_list("\n\n3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(parse_edge_list("2 0\norder: 0 0\n").is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(parse_order("2,0 1", 3).unwrap().scan(), &[2, 0, 1]);
        assert!(parse_order("0 1", 3).is_err());
        assert!(parse_order("0 1 1", 3).is_err());
    }

    #[test]
    fn latin_csv_round_trip() {
        let l = tensor_square(2).unwrap();
        let text = grid_csv(&l.row_vecs());
        assert_eq!(text.lines().next().unwrap(), "4,3,2,1");
        assert_eq!(parse_latin_csv(&text).unwrap(), l);
        assert!(parse_latin_csv("1,2\n1,2\n").is_err());
        assert!(matches!(parse_grid("1,2\n2\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn defining_set_triples() {
        let l = tensor_square(2).unwrap();
        let csv = defining_set_csv(&tensor_defining_set(2).unwrap(), &l);
        assert_eq!(csv.lines().count(), 6);
        assert!(csv.lines().all(|line| {
            let t: Vec<usize> = line.split(',').map(|x| x.parse().unwrap()).collect();
            l.get(t[0], t[1]) as usize == t[2]
        }));
    }
}
