//! The First-Fit coloring engine.

use serde::{Deserialize, Serialize};

use crate::caps::{check_cap, Caps};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, complete_graph, Graph, ProductGraph, VertexOrder};

/// A total vertex coloring with colors `1..=k` (1-based, 0 never appears).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Validates that every color is positive and every color in `1..=k` is used.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::InvalidColoring("color 0 is not allowed".into()));
        }
        let mut used = vec![false; k as usize + 1];
        for &c in &colors {
            used[c as usize] = true;
        }
        if let Some(c) = (1..=k as usize).find(|&c| !used[c]) {
            return Err(Error::InvalidColoring(format!("color {c} is unused but {k} is")));
        }
        Ok(Self { colors, k })
    }

    /// Relabels the colors in use to `1..=k`, preserving their relative order.
    pub fn normalized(raw: &[u32]) -> Self {
        let mut used: Vec<u32> = raw.to_vec();
        used.sort_unstable();
        used.dedup();
        let colors = raw
            .iter()
            .map(|c| used.binary_search(c).expect("present") as u32 + 1)
            .collect();
        Self {
            colors,
            k: used.len() as u32,
        }
    }

    /// Replay output: `k` is the largest color, which after pinning may
    /// leave gaps below it.
    pub(crate) fn from_replay(colors: Vec<u32>) -> Self {
        let k = colors.iter().copied().max().unwrap_or(0);
        Self { colors, k }
    }

    #[inline]
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color classes; entry `c - 1` lists the vertices of color `c`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k as usize];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c as usize - 1].push(v);
        }
        classes
    }

    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found: self.colors.len(),
            });
        }
        match g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            Some((u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check_proper(g).is_ok()
    }
}

/// A partial coloring fixed before the scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precoloring {
    pins: Vec<Option<u32>>,
}

impl Precoloring {
    pub fn empty(n: usize) -> Self {
        Self { pins: vec![None; n] }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let mut pins = vec![None; n];
        for (v, c) in pairs {
            if v >= n {
                return Err(Error::InvalidArgument(format!("pinned vertex {v} out of range 0..{n}")));
            }
            if c == 0 {
                return Err(Error::InvalidColoring("pinned color 0".into()));
            }
            pins[v] = Some(c);
        }
        Ok(Self { pins })
    }

    /// The restriction of `target` to `domain`.
    pub fn restrict(target: &Coloring, domain: &[usize]) -> Self {
        let mut pins = vec![None; target.len()];
        for &v in domain {
            pins[v] = Some(target.color(v));
        }
        Self { pins }
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.pins[v]
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.pins.len()).filter(|&v| self.pins[v].is_some()).collect()
    }

    pub fn len(&self) -> usize {
        self.pins.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn n(&self) -> usize {
        self.pins.len()
    }
}

fn check_order(g: &Graph, order: &VertexOrder) {
    assert_eq!(g.n(), order.len(), "ordering length must match the vertex count");
}

/// FF(G, σ): each vertex in scan order gets the least color absent from its
/// already-colored neighbors.
pub fn first_fit(g: &Graph, order: &VertexOrder) -> Coloring {
    check_order(g, order);
    let mut colors = vec![0u32; g.n()];
    let mut mark = vec![usize::MAX; g.max_degree() + 2];
    let k = ff_scan(g, order.scan(), &mut colors, &mut mark);
    Coloring { colors, k }
}

/// Core scan shared by the public entry points; returns the number of colors.
/// `colors` must be zeroed and `mark` at least `Δ + 2` long.
pub(crate) fn ff_scan(g: &Graph, scan: &[usize], colors: &mut [u32], mark: &mut [usize]) -> u32 {
    let mut k = 0;
    for (step, &v) in scan.iter().enumerate() {
        for u in g.neighbors(v) {
            let c = colors[u] as usize;
            if c != 0 {
                mark[c] = step;
            }
        }
        let mut c = 1;
        while mark[c] == step {
            c += 1;
        }
        colors[v] = c as u32;
        k = k.max(c as u32);
    }
    // reset marks for the next caller reusing the buffer
    mark.fill(usize::MAX);
    k
}

/// First-Fit subject to a precoloring: pinned vertices keep their colors and
/// are skipped by the scan, but they are visible as colored neighbors from the
/// first step on.
pub fn first_fit_with_precoloring(g: &Graph, order: &VertexOrder, pre: &Precoloring) -> Result<Coloring> {
    check_order(g, order);
    if pre.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: pre.n(),
        });
    }
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (pre.get(u), pre.get(v)) {
            if a == b {
                return Err(Error::PrecoloringConflict(u, v));
            }
        }
    }
    let mut colors: Vec<u32> = pre.pins.iter().map(|p| p.unwrap_or(0)).collect();
    let max_pin = colors.iter().copied().max().unwrap_or(0) as usize;
    let mut mark = vec![usize::MAX; max_pin + g.max_degree() + 2];
    for (step, &v) in order.scan().iter().enumerate() {
        if pre.get(v).is_some() {
            continue;
        }
        for u in g.neighbors(v) {
            let c = colors[u] as usize;
            if c != 0 {
                mark[c] = step;
            }
        }
        let mut c = 1;
        while mark[c] == step {
            c += 1;
        }
        colors[v] = c as u32;
    }
    // Pinned colors are avoided during the scan, so a clash here means the
    // engine itself is broken.
    if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u] == colors[v]) {
        let vertex = if pre.get(u).is_some() { v } else { u };
        return Err(Error::GreedyPinCollision {
            vertex,
            color: colors[vertex],
        });
    }
    Ok(Coloring::from_replay(colors))
}

/// Histogram of FF(G, σ) over all `n!` orderings: entry `k` counts the
/// orderings using exactly `k` colors.
pub fn ff_histogram(g: &Graph, caps: &Caps) -> Result<Vec<u64>> {
    check_cap("exhaustive ordering search vertex count", g.n(), caps.grundy_exhaustive)?;
    let n = g.n();
    let mut hist = vec![0u64; g.max_degree() + 2];
    let mut colors = vec![0u32; n];
    let mut mark = vec![usize::MAX; g.max_degree() + 2];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut record = |perm: &[usize], colors: &mut Vec<u32>, mark: &mut Vec<usize>| {
        colors.fill(0);
        let k = ff_scan(g, perm, colors, mark);
        hist[k as usize] += 1;
    };
    // Heap's algorithm
    record(&perm, &mut colors, &mut mark);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            record(&perm, &mut colors, &mut mark);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(hist)
}

/// Γ(G) by trying every ordering.
pub fn grundy_exhaustive(g: &Graph, caps: &Caps) -> Result<usize> {
    let hist = ff_histogram(g, caps)?;
    Ok(hist.iter().rposition(|&c| c > 0).unwrap_or(0))
}

/// Γ(G) as the longest peeling of the vertex set into successive maximal
/// independent sets: a coloring is a First-Fit output for some ordering iff
/// each class `C_i` is maximal independent in `G - (C_1 ∪ … ∪ C_{i-1})`.
/// Memoized over vertex subsets with the `1 + Δ(G[S])` bound for cut-off.
pub fn grundy_by_peeling(g: &Graph, caps: &Caps) -> Result<usize> {
    check_cap("grundy vertex count", g.n(), caps.grundy.min(24))?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.mask64(v)).collect();
    let mut memo = vec![u8::MAX; 1 << n];
    memo[0] = 0;
    Ok(peel(&adj, (1u64 << n) - 1, &mut memo) as usize)
}

fn peel(adj: &[u64], set: u64, memo: &mut [u8]) -> u8 {
    if memo[set as usize] != u8::MAX {
        return memo[set as usize];
    }
    let mut bound = 0u32;
    let mut bits = set;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        bound = bound.max((adj[v] & set).count_ones());
    }
    let bound = bound as u8 + 1;
    let mut best = 1u8;
    let mut stack = Vec::new();
    maximal_independent_sets(adj, 0, set, 0, &mut stack);
    for class in stack {
        if best == bound {
            break;
        }
        let rest = set & !class;
        let value = 1 + peel(adj, rest, memo);
        best = best.max(value);
    }
    memo[set as usize] = best;
    best
}

/// Bron–Kerbosch with pivoting, run on the complement: collects every
/// maximal independent set of `G[candidates ∪ chosen]` extending `chosen`.
fn maximal_independent_sets(adj: &[u64], chosen: u64, candidates: u64, excluded: u64, out: &mut Vec<u64>) {
    if candidates == 0 {
        if excluded == 0 {
            out.push(chosen);
        }
        return;
    }
    // pivot: vertex whose closed neighborhood covers most candidates
    let union = candidates | excluded;
    let mut pivot = union.trailing_zeros() as usize;
    let mut pivot_cover = 0;
    let mut bits = union;
    while bits != 0 {
        let u = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let cover = (candidates & !(adj[u] | 1 << u)).count_ones();
        // complement-neighbors of u in candidates: fewer branches when large
        if cover >= pivot_cover {
            pivot_cover = cover;
            pivot = u;
        }
    }
    let mut branch = candidates & (adj[pivot] | 1 << pivot);
    let mut candidates = candidates;
    let mut excluded = excluded;
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        let closed = adj[v] | 1 << v;
        maximal_independent_sets(adj, chosen | 1 << v, candidates & !closed, excluded & !closed, out);
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
}

/// Γ(G): exhaustive over orderings up to the `grundy_exhaustive` cap, peeling
/// search above it up to the `grundy` cap.
pub fn grundy_number(g: &Graph, caps: &Caps) -> Result<usize> {
    if g.n() <= caps.grundy_exhaustive {
        grundy_exhaustive(g, caps)
    } else {
        grundy_by_peeling(g, caps)
    }
}

/// Ordering of K_m□K_n (`m < n`) on which First-Fit uses `m + n - 1` colors.
///
/// The first `n - 1` columns get color `i + j - 1 (mod n - 1)` (1-based, 0
/// read as `n - 1`), scanned class by class; the last column is scanned top
/// down. Returns the product, the ordering and its replayed coloring.
pub fn grundy_witness_km_kn(m: usize, n: usize) -> Result<(ProductGraph, VertexOrder, Coloring)> {
    if m == 0 || m >= n {
        return Err(Error::InvalidArgument(format!(
            "witness needs 1 <= m < n, got m={m}, n={n}"
        )));
    }
    let product = cartesian_product(&complete_graph(m)?, &complete_graph(n)?)?;
    let modulus = n - 1;
    let pattern = |i: usize, j: usize| -> u32 {
        if j == n - 1 {
            (n + i) as u32
        } else {
            match (i + j + 1) % modulus {
                0 => modulus as u32,
                c => c as u32,
            }
        }
    };
    let mut cells: Vec<(u32, usize, usize)> = (0..m)
        .flat_map(|i| (0..n - 1).map(move |j| (pattern(i, j), i, j)))
        .collect();
    cells.sort_unstable();
    let scan: Vec<usize> = cells
        .iter()
        .map(|&(_, i, j)| product.index(i, j))
        .chain((0..m).map(|i| product.index(i, n - 1)))
        .collect();
    let order = VertexOrder::from_scan(scan)?;
    let coloring = first_fit(&product.graph, &order);
    let expected: Vec<u32> = (0..m * n).map(|v| pattern(v / n, v % n)).collect();
    if coloring.colors() != expected.as_slice() || coloring.k() as usize != m + n - 1 {
        return Err(Error::VerificationFailed(format!(
            "witness replay for K_{m}□K_{n} used {} colors",
            coloring.k()
        )));
    }
    Ok((product, order, coloring))
}
