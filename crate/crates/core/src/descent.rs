//! Descents of a colored, ordered graph.
//!
//! For a vertex `v` of color `y` and a color `x < y`, let `N` be the set of
//! all neighbors of `v` colored `x`. Then `{v} ∪ N` is a descent when every
//! member of `N` is scanned after `v` (including the case `N = ∅`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::first_fit::{first_fit, Coloring};
use crate::graph::{Graph, VertexOrder};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Descent {
    pub vertex: usize,
    pub low_color: u32,
    pub high_color: u32,
    /// All `low_color` neighbors of `vertex`, sorted by index.
    pub witnesses: Vec<usize>,
}

impl Descent {
    /// The set `{v} ∪ N` a greedy defining set has to meet.
    pub fn members(&self) -> Vec<usize> {
        let mut m = Vec::with_capacity(self.witnesses.len() + 1);
        m.push(self.vertex);
        m.extend_from_slice(&self.witnesses);
        m
    }
}

fn check_inputs(g: &Graph, order: &VertexOrder, c: &Coloring) -> Result<()> {
    if order.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: order.len(),
        });
    }
    c.check_proper(g)
}

/// Every descent of `(G, τ, C)`, ordered by the rank of `v` then by `x`.
pub fn find_descents(g: &Graph, order: &VertexOrder, c: &Coloring) -> Result<Vec<Descent>> {
    check_inputs(g, order, c)?;
    let mut out = Vec::new();
    // per color below y: (any earlier neighbor?, neighbors of that color)
    let mut earlier = Vec::new();
    let mut by_color: Vec<Vec<usize>> = Vec::new();
    for &v in order.scan() {
        let y = c.color(v) as usize;
        if y <= 1 {
            continue;
        }
        earlier.clear();
        earlier.resize(y, false);
        by_color.iter_mut().for_each(Vec::clear);
        if by_color.len() < y {
            by_color.resize(y, Vec::new());
        }
        let rv = order.rank(v);
        for u in g.neighbors(v) {
            let x = c.color(u) as usize;
            if x < y {
                by_color[x].push(u);
                if order.rank(u) < rv {
                    earlier[x] = true;
                }
            }
        }
        for x in 1..y {
            if !earlier[x] {
                out.push(Descent {
                    vertex: v,
                    low_color: x as u32,
                    high_color: y as u32,
                    witnesses: by_color[x].clone(),
                });
            }
        }
    }
    Ok(out)
}

pub fn is_descent_free(g: &Graph, order: &VertexOrder, c: &Coloring) -> Result<bool> {
    check_inputs(g, order, c)?;
    Ok(find_descents(g, order, c)?.is_empty())
}

/// Outcome of comparing a coloring against First-Fit on the same ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentFreeVerdict {
    pub descent_free: bool,
    /// `Some(equal)` when the coloring is descent-free, `None` otherwise.
    pub matches_first_fit: Option<bool>,
}

impl DescentFreeVerdict {
    /// Descent-free colorings must coincide with the First-Fit output.
    pub fn holds(&self) -> bool {
        self.matches_first_fit != Some(false)
    }
}

/// If `c` is descent-free under `order`, compares it color-by-color with
/// First-Fit on `order`.
pub fn check_descent_free_theorem(g: &Graph, order: &VertexOrder, c: &Coloring) -> DescentFreeVerdict {
    match is_descent_free(g, order, c) {
        Ok(true) => DescentFreeVerdict {
            descent_free: true,
            matches_first_fit: Some(first_fit(g, order).colors() == c.colors()),
        },
        _ => DescentFreeVerdict {
            descent_free: false,
            matches_first_fit: None,
        },
    }
}
