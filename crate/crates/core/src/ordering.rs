//! Lexicographic and quasi-lexicographic orderings of a product G□H.
//!
//! An ordering τ of G□H is quasi-lexicographic when `τ(a) < τ(b)` forces
//! `a` to be strictly earlier than `b` in at least one factor. Contrapositively,
//! whenever `b` is coordinatewise no later than `a` (in factor ranks), `b`
//! must precede `a`: the quasi-lex orders are exactly the linear extensions of
//! the dominance order on the rank grid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, VertexOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingKind {
    Lex,
    QuasiLex,
    Arbitrary,
}

/// A scan order over the vertices of G□H (index `g * n_h + h`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductOrdering {
    pub dims: (usize, usize),
    pub order: VertexOrder,
    pub kind: OrderingKind,
}

impl ProductOrdering {
    pub fn new(dims: (usize, usize), order: VertexOrder, kind: OrderingKind) -> Result<Self> {
        if order.len() != dims.0 * dims.1 {
            return Err(Error::DimensionMismatch {
                expected: dims.0 * dims.1,
                found: order.len(),
            });
        }
        Ok(Self { dims, order, kind })
    }
}

/// Row-major scan: rows by increasing σ-rank, each row by increasing σ′-rank.
pub fn lex_ordering(g: &OrderedGraph, h: &OrderedGraph) -> ProductOrdering {
    let n_h = h.n();
    let scan = g
        .order
        .scan()
        .iter()
        .flat_map(|&a| h.order.scan().iter().map(move |&b| a * n_h + b))
        .collect();
    ProductOrdering {
        dims: (g.n(), n_h),
        order: VertexOrder::from_scan(scan).expect("lex scan is a permutation"),
        kind: OrderingKind::Lex,
    }
}

/// Pairwise check: for all `τ(a) < τ(b)`, `σ(u) < σ(u')` or `σ′(v) < σ′(v')`.
pub fn is_quasi_lex(tau: &ProductOrdering, g: &OrderedGraph, h: &OrderedGraph) -> Result<bool> {
    let (n_g, n_h) = (g.n(), h.n());
    if tau.dims != (n_g, n_h) || tau.order.len() != n_g * n_h {
        return Err(Error::DimensionMismatch {
            expected: n_g * n_h,
            found: tau.order.len(),
        });
    }
    let coords: Vec<(usize, usize)> = tau
        .order
        .scan()
        .iter()
        .map(|&x| (g.order.rank(x / n_h), h.order.rank(x % n_h)))
        .collect();
    for (i, &(ra, ca)) in coords.iter().enumerate() {
        for &(rb, cb) in &coords[i + 1..] {
            if !(ra < rb || ca < cb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of [`enumerate_quasi_lex`]: the first `cap` orderings in
/// backtracking order, plus the exact total.
#[derive(Debug, Clone)]
pub struct QuasiLexEnumeration {
    pub orderings: Vec<ProductOrdering>,
    pub total: u64,
    pub truncated: bool,
}

/// Visits every quasi-lex ordering of G□H, in a fixed deterministic order.
/// The visitor receives the scan sequence; returns the number visited.
pub fn for_each_quasi_lex(
    g: &OrderedGraph,
    h: &OrderedGraph,
    max_vertices: usize,
    mut visit: impl FnMut(&[usize]),
) -> Result<u64> {
    let (n_g, n_h) = (g.n(), h.n());
    let size = n_g * n_h;
    if size > max_vertices {
        return Err(Error::EnumerationTooLarge {
            size,
            cap: max_vertices,
        });
    }
    let mut state = Extensions {
        rows: g.order.scan(),
        cols: h.order.scan(),
        n_h,
        filled: vec![0; n_g],
        scan: Vec::with_capacity(size),
        count: 0,
    };
    state.extend(&mut visit);
    Ok(state.count)
}

struct Extensions<'a> {
    rows: &'a [usize],
    cols: &'a [usize],
    n_h: usize,
    // filled[i]: cells of rank-row i already emitted (always a prefix)
    filled: Vec<usize>,
    scan: Vec<usize>,
    count: u64,
}

impl Extensions<'_> {
    fn extend(&mut self, visit: &mut impl FnMut(&[usize])) {
        if self.scan.len() == self.rows.len() * self.n_h {
            self.count += 1;
            visit(&self.scan);
            return;
        }
        for i in 0..self.rows.len() {
            let j = self.filled[i];
            // cell (i, j) is minimal among the remaining ones
            if j < self.n_h && (i == 0 || self.filled[i - 1] > j) {
                self.filled[i] += 1;
                self.scan.push(self.rows[i] * self.n_h + self.cols[j]);
                self.extend(visit);
                self.scan.pop();
                self.filled[i] -= 1;
            }
        }
    }
}

/// Every quasi-lex ordering exactly once; keeps the first `cap` and counts all.
pub fn enumerate_quasi_lex(
    g: &OrderedGraph,
    h: &OrderedGraph,
    cap: usize,
    max_vertices: usize,
) -> Result<QuasiLexEnumeration> {
    let dims = (g.n(), h.n());
    let mut orderings = Vec::new();
    let total = for_each_quasi_lex(g, h, max_vertices, |scan| {
        if orderings.len() < cap {
            let order = VertexOrder::from_scan(scan.to_vec()).expect("extension is a permutation");
            orderings.push(ProductOrdering {
                dims,
                order,
                kind: OrderingKind::QuasiLex,
            });
        }
    })?;
    Ok(QuasiLexEnumeration {
        truncated: (orderings.len() as u64) < total,
        orderings,
        total,
    })
}

/// Number of standard Young tableaux of an `m × n` rectangle (hook-length
/// formula): the count of linear extensions of the dominance order.
pub fn rectangle_tableaux_count(m: usize, n: usize) -> u128 {
    let cells = (m * n) as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let mut factor = 1u128;
    for i in 0..m {
        for j in 0..n {
            num *= factor;
            factor += 1;
            den *= ((m - i - 1) + (n - j - 1) + 1) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(factor - 1, cells);
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
