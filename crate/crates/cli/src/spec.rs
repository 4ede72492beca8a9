//! Shorthand specs for factors, products, Latin squares and orderings.

use std::fs;

use anyhow::{bail, Context, Result};
use ffgrid_core::graph::{complete_graph, cycle_graph, path_graph, OrderedGraph, VertexOrder};
use ffgrid_core::io::{parse_edge_list, parse_latin_csv, parse_order};
use ffgrid_core::latin::{cayley_table, tensor_square, LatinRectangle};

/// `Kn`, `Pn`, `Cn` or an edge-list path.
pub fn parse_factor(spec: &str) -> Result<OrderedGraph> {
    let spec = spec.trim();
    let shorthand = spec
        .get(1..)
        .and_then(|rest| rest.parse::<usize>().ok())
        .map(|n| (spec.as_bytes()[0].to_ascii_uppercase(), n));
    let graph = match shorthand {
        Some((b'K', n)) => complete_graph(n)?,
        Some((b'P', n)) => path_graph(n)?,
        Some((b'C', n)) => cycle_graph(n)?,
        _ => {
            let text = fs::read_to_string(spec).with_context(|| format!("reading edge list `{spec}`"))?;
            return parse_edge_list(&text).with_context(|| format!("in `{spec}`"));
        }
    };
    Ok(OrderedGraph::natural(graph))
}

/// Two factor specs separated by a comma, e.g. `K3,P4`.
pub fn parse_product(spec: &str) -> Result<(OrderedGraph, OrderedGraph)> {
    let Some((g, h)) = spec.split_once(',') else {
        bail!("product spec `{spec}` must name two factors separated by a comma");
    };
    Ok((parse_factor(g)?, parse_factor(h)?))
}

/// `Lk:<k>`, `Ct:<t>` or a Latin CSV path.
pub fn parse_latin(spec: &str) -> Result<LatinRectangle> {
    let level = |rest: &str| -> Result<u32> { rest.parse().with_context(|| format!("bad level in `{spec}`")) };
    if let Some(rest) = spec.strip_prefix("Lk:") {
        return Ok(tensor_square(level(rest)?)?);
    }
    if let Some(rest) = spec.strip_prefix("Ct:") {
        return Ok(cayley_table(level(rest)?)?);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("reading Latin CSV `{spec}`"))?;
    parse_latin_csv(&text).with_context(|| format!("in `{spec}`"))
}

/// The level `k` of an `Lk:<k>` spec.
pub fn latin_level(spec: &str) -> Option<u32> {
    spec.strip_prefix("Lk:")?.parse().ok()
}

pub enum OrderSpec {
    Lex,
    Explicit(VertexOrder),
}

/// `lex`, `file:<path>` or `perm:<list>` over the product's `n` vertices.
pub fn parse_order_spec(spec: &str, n: usize) -> Result<OrderSpec> {
    if spec == "lex" {
        return Ok(OrderSpec::Lex);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).with_context(|| format!("reading ordering `{path}`"))?;
        return Ok(OrderSpec::Explicit(
            parse_order(&text, n).with_context(|| format!("in `{path}`"))?,
        ));
    }
    if let Some(list) = spec.strip_prefix("perm:") {
        return Ok(OrderSpec::Explicit(parse_order(list, n)?));
    }
    bail!("ordering `{spec}` must be `lex`, `file:<path>` or `perm:<list>`")
}
