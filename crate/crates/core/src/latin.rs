//! Latin rectangles as colorings of K_p□K_q under lex.
//!
//! A `p × q` Latin rectangle (`p <= q`) over entries `1..=q` is exactly a
//! proper `q`-coloring of K_p□K_q in which every row uses all `q` colors.
//! Cell `(i, j)` is product vertex `i * q + j`, and lex is the identity scan.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::descent::Descent;
use crate::error::{Error, Result};
use crate::first_fit::Coloring;
use crate::gds::{certify, is_gds, GdsCertificate, GdsMethod, SearchStats};
use crate::graph::{cartesian_product, complete_graph, Graph, ProductGraph, VertexOrder};
use crate::oracle::maximum_independent_set;

/// Largest side accepted by the square constructions.
pub const MAX_SIDE: usize = 4096;

/// A `p × q` array, each row a permutation of `base+1..=base+q`, columns
/// repeat-free. `base` is 0 except for shifted squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinRectangle {
    p: usize,
    q: usize,
    base: u32,
    cells: Vec<u32>,
}

impl LatinRectangle {
    pub fn new(p: usize, q: usize, cells: Vec<u32>) -> Result<Self> {
        Self::with_base(p, q, 0, cells)
    }

    fn with_base(p: usize, q: usize, base: u32, cells: Vec<u32>) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidLatin("empty array".into()));
        }
        if p > q {
            return Err(Error::InvalidLatin(format!("{p} rows exceed {q} columns")));
        }
        if cells.len() != p * q {
            return Err(Error::InvalidLatin(format!(
                "expected {} cells, found {}",
                p * q,
                cells.len()
            )));
        }
        let r = Self { p, q, base, cells };
        r.validate()?;
        Ok(r)
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let p = rows.len();
        let q = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != q) {
            return Err(Error::InvalidLatin("ragged rows".into()));
        }
        Self::new(p, q, rows.concat())
    }

    fn validate(&self) -> Result<()> {
        let (p, q, base) = (self.p, self.q, self.base);
        let mut seen = vec![false; q];
        for i in 0..p {
            seen.fill(false);
            for j in 0..q {
                let e = self.get(i, j);
                if e <= base || e > base + q as u32 {
                    return Err(Error::InvalidLatin(format!("entry {e} at ({i},{j}) out of range")));
                }
                let slot = (e - base - 1) as usize;
                if seen[slot] {
                    return Err(Error::InvalidLatin(format!("entry {e} repeated in row {i}")));
                }
                seen[slot] = true;
            }
        }
        for j in 0..q {
            seen.fill(false);
            for i in 0..p {
                let slot = (self.get(i, j) - base - 1) as usize;
                if seen[slot] {
                    return Err(Error::InvalidLatin(format!(
                        "entry {} repeated in column {j}",
                        self.get(i, j)
                    )));
                }
                seen[slot] = true;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.q
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn is_square(&self) -> bool {
        self.p == self.q
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.q + j]
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        self.cells.chunks(self.q).map(<[u32]>::to_vec).collect()
    }

    #[inline]
    pub fn cell_index(&self, i: usize, j: usize) -> usize {
        i * self.q + j
    }

    /// The `size × size` block with top-left corner `(row, col)`.
    pub fn sub_square(&self, row: usize, col: usize, size: usize) -> Result<LatinRectangle> {
        if row + size > self.p || col + size > self.q {
            return Err(Error::InvalidArgument("block out of range".into()));
        }
        let cells: Vec<u32> = (row..row + size)
            .flat_map(|i| (col..col + size).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        let base = cells.iter().copied().min().unwrap_or(1) - 1;
        Self::with_base(size, size, base, cells)
    }

    /// The coloring of K_p□K_q this array represents. Requires base 0.
    pub fn to_coloring(&self) -> Result<Coloring> {
        if self.base != 0 {
            return Err(Error::InvalidLatin("shifted entries are not a coloring by 1..q".into()));
        }
        Coloring::new(self.cells.clone())
    }

    /// K_p□K_q together with its lex scan.
    pub fn product(&self) -> Result<(ProductGraph, VertexOrder)> {
        let product = cartesian_product(&complete_graph(self.p)?, &complete_graph(self.q)?)?;
        Ok((product, VertexOrder::identity(self.p * self.q)))
    }
}

/// C_t: the addition table of (Z_2)^t shifted to entries `1..=2^t`,
/// `C_t[i][j] = (i XOR j) + 1`.
pub fn cayley_table(t: u32) -> Result<LatinRectangle> {
    let n = side_for_level(t)?;
    let cells = (0..n).flat_map(|i| (0..n).map(move |j| (i ^ j) as u32 + 1)).collect();
    LatinRectangle::new(n, n, cells)
}

fn side_for_level(t: u32) -> Result<usize> {
    if t > 12 {
        return Err(Error::InstanceTooLarge {
            what: "square side",
            size: 1usize << t.min(60),
            cap: MAX_SIDE,
        });
    }
    Ok(1usize << t)
}

/// `(A ⊗ B)[(i1,i2),(j1,j2)] = (A[i1][j1] - 1) * |B| + B[i2][j2]` for squares.
pub fn tensor_product(a: &LatinRectangle, b: &LatinRectangle) -> Result<LatinRectangle> {
    if !a.is_square() || !b.is_square() || a.base != 0 || b.base != 0 {
        return Err(Error::InvalidLatin("tensor product needs unshifted squares".into()));
    }
    let (na, nb) = (a.p, b.p);
    let n = na * nb;
    if n > MAX_SIDE {
        return Err(Error::InstanceTooLarge {
            what: "square side",
            size: n,
            cap: MAX_SIDE,
        });
    }
    let mut cells = vec![0; n * n];
    for i1 in 0..na {
        for j1 in 0..na {
            let high = (a.get(i1, j1) - 1) * nb as u32;
            for i2 in 0..nb {
                for j2 in 0..nb {
                    cells[(i1 * nb + i2) * n + j1 * nb + j2] = high + b.get(i2, j2);
                }
            }
        }
    }
    LatinRectangle::new(n, n, cells)
}

/// L_k: the k-fold tensor power of `[[2,1],[1,2]]` (L_0 = `[[1]]`).
pub fn tensor_square(k: u32) -> Result<LatinRectangle> {
    side_for_level(k)?;
    let unit = LatinRectangle::new(2, 2, vec![2, 1, 1, 2])?;
    let mut acc = LatinRectangle::new(1, 1, vec![1])?;
    for _ in 0..k {
        acc = tensor_product(&acc, &unit)?;
    }
    Ok(acc)
}

/// `L + p`: every entry raised by `p` (which may be negative as long as the
/// entries stay positive).
pub fn shift_entries(l: &LatinRectangle, p: i64) -> Result<LatinRectangle> {
    if !l.is_square() {
        return Err(Error::InvalidLatin("shift is defined for squares".into()));
    }
    let base = l.base as i64 + p;
    if base < 0 {
        return Err(Error::InvalidArgument(format!(
            "shift by {p} makes entries non-positive"
        )));
    }
    let cells = l.cells.iter().map(|&e| (e as i64 + p) as u32).collect();
    LatinRectangle::with_base(l.p, l.q, base as u32, cells)
}

/// Descents of `r` as a coloring of (K_p□K_q, lex), read directly off the
/// array: cell `(i, j)` with entry `y` and `x < y` is a descent when `x`
/// lies to the right in row `i` and, if column `j` contains `x`, below.
#[allow(clippy::needless_range_loop)]
pub fn latin_descents(r: &LatinRectangle) -> Result<Vec<Descent>> {
    if r.base != 0 {
        return Err(Error::InvalidLatin("shifted entries".into()));
    }
    let (p, q) = (r.p, r.q);
    // column_of[i][x]: column of entry x in row i; row_of[j][x]: row of x in column j
    let mut column_of = vec![vec![0usize; q + 1]; p];
    let mut row_of = vec![vec![usize::MAX; q + 1]; q];
    for i in 0..p {
        for j in 0..q {
            let e = r.get(i, j) as usize;
            column_of[i][e] = j;
            row_of[j][e] = i;
        }
    }
    let mut out = Vec::new();
    for i in 0..p {
        for j in 0..q {
            let y = r.get(i, j);
            for x in 1..y {
                let jx = column_of[i][x as usize];
                if jx < j {
                    continue;
                }
                let ix = row_of[j][x as usize];
                let mut witnesses = vec![r.cell_index(i, jx)];
                if ix != usize::MAX {
                    if ix < i {
                        continue;
                    }
                    witnesses.push(r.cell_index(ix, j));
                }
                witnesses.sort_unstable();
                out.push(Descent {
                    vertex: r.cell_index(i, j),
                    low_color: x,
                    high_color: y,
                    witnesses,
                });
            }
        }
    }
    Ok(out)
}

/// The per-entry graphs G\[e\] and their disjoint union G(R) on all cells:
/// two cells holding the same entry are adjacent iff they are the two
/// witnesses of one descent.
#[derive(Debug, Clone)]
pub struct EntryGraph {
    pub graph: Graph,
    /// `entries[e - 1]`: cells holding entry `e`, row-major.
    pub entries: Vec<Vec<usize>>,
    /// Descents with a single witness; they leave no edge in G(R).
    pub one_witness: Vec<Descent>,
}

impl EntryGraph {
    /// G\[e\] on the cells of `entries[e - 1]` (local indices).
    pub fn entry_subgraph(&self, e: u32) -> Graph {
        let cells = &self.entries[e as usize - 1];
        let mut g = Graph::new(cells.len()).expect("small");
        for (a, &u) in cells.iter().enumerate() {
            for (b, &v) in cells.iter().enumerate().skip(a + 1) {
                if self.graph.has_edge(u, v) {
                    g.add_edge(a, b).expect("distinct local vertices");
                }
            }
        }
        g
    }
}

pub fn entry_graph(r: &LatinRectangle) -> Result<EntryGraph> {
    let descents = latin_descents(r)?;
    let mut graph = Graph::new(r.p * r.q)?;
    let mut one_witness = Vec::new();
    for d in descents {
        match d.witnesses.as_slice() {
            [a, b] => graph.add_edge(*a, *b)?,
            _ => one_witness.push(d),
        }
    }
    let mut entries = vec![Vec::new(); r.q];
    for (v, &e) in r.cells.iter().enumerate() {
        entries[e as usize - 1].push(v);
    }
    Ok(EntryGraph {
        graph,
        entries,
        one_witness,
    })
}

/// Upper bound on the smallest GDS of any `m × n` Latin rectangle:
/// `nm - n + m - 1 - m log2(4m - 4) / 4`, for `2 <= m <= n`.
pub fn rectangle_gds_bound(m: usize, n: usize) -> Result<f64> {
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "bound needs 2 <= m <= n, got m={m}, n={n}"
        )));
    }
    let (m, n) = (m as f64, n as f64);
    Ok(n * m - n + m - 1.0 - m * (4.0 * m - 4.0).log2() / 4.0)
}

#[derive(Debug, Clone)]
pub struct CoverGds {
    pub certificate: GdsCertificate,
    /// The vertex cover of G(R) before augmentation.
    pub cover: Vec<usize>,
    /// Whether every G\[e\] was covered exactly (minimum cover).
    pub cover_exact: bool,
    pub one_witness_descents: usize,
    /// Cells added for one-witness descents the cover missed.
    pub augmented: usize,
    /// Replay verdict of the bare cover.
    pub raw_cover_verified: bool,
    /// [`rectangle_gds_bound`] when `p >= 2`.
    pub bound: Option<f64>,
}

/// A GDS of `(r, lex)` from a vertex cover of G(R), augmented with the
/// descent cell of every one-witness descent the cover misses.
///
/// G(R) is covered per entry: exactly (complement of a maximum independent
/// set) when the entry has at most `caps.cover_exact` cells, otherwise by
/// repeatedly taking a vertex of maximum remaining degree.
pub fn rectangle_gds_via_cover(r: &LatinRectangle, caps: &Caps) -> Result<CoverGds> {
    let eg = entry_graph(r)?;
    let mut cover = Vec::new();
    let mut cover_exact = true;
    for e in 1..=r.q as u32 {
        let cells = &eg.entries[e as usize - 1];
        let sub = eg.entry_subgraph(e);
        let local = if sub.n() <= caps.cover_exact.min(64) {
            let keep = maximum_independent_set(
                &sub,
                &Caps {
                    independence: 64,
                    ..*caps
                },
            )?;
            (0..sub.n()).filter(|v| !keep.contains(v)).collect()
        } else {
            cover_exact = false;
            greedy_cover(&sub)
        };
        cover.extend(local.into_iter().map(|v: usize| cells[v]));
    }
    cover.sort_unstable();
    let coloring = r.to_coloring()?;
    let (product, order) = r.product()?;
    let raw_cover_verified = is_gds(&product.graph, &order, &coloring, &cover)?;
    let mut in_set = vec![false; r.p * r.q];
    for &v in &cover {
        in_set[v] = true;
    }
    let mut augmented = 0;
    for d in &eg.one_witness {
        if !d.members().iter().any(|&v| in_set[v]) {
            in_set[d.vertex] = true;
            augmented += 1;
        }
    }
    let domain: Vec<usize> = (0..r.p * r.q).filter(|&v| in_set[v]).collect();
    let certificate = certify(
        &product.graph,
        &order,
        &coloring,
        domain,
        GdsMethod::VertexCover,
        SearchStats::default(),
    )?;
    if !certificate.verified {
        return Err(Error::VerificationFailed(format!(
            "augmented cover of G(R) (size {}) does not reproduce the rectangle",
            certificate.size()
        )));
    }
    Ok(CoverGds {
        certificate,
        cover_exact,
        one_witness_descents: eg.one_witness.len(),
        augmented,
        raw_cover_verified,
        bound: (r.p >= 2).then(|| rectangle_gds_bound(r.p, r.q)).transpose()?,
        cover,
    })
}

fn greedy_cover(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut cover = Vec::new();
    loop {
        let best = (0..n)
            .filter(|&v| !removed[v])
            .map(|v| (g.neighbors(v).filter(|&u| !removed[u]).count(), v))
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
        match best {
            Some((d, v)) if d > 0 => {
                removed[v] = true;
                cover.push(v);
            }
            _ => break,
        }
    }
    cover.sort_unstable();
    cover
}

/// The recursive defining set of L_k: cell positions `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDefiningSet {
    pub k: u32,
    pub positions: Vec<(usize, usize)>,
}

impl TensorDefiningSet {
    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Product vertex indices in L_k's K_n□K_n.
    pub fn cells(&self) -> Vec<usize> {
        let n = 1usize << self.k;
        self.positions.iter().map(|&(i, j)| i * n + j).collect()
    }
}

/// Largest level built by [`tensor_defining_set`].
pub const MAX_DEFINING_LEVEL: u32 = 6;

// Boxed cells of the 4×4 base case.
const LEVEL2: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 2), (3, 0)];
// Base-case boxes whose 2^(k-2) blocks are taken whole at higher levels.
const FULL_BLOCKS: [(usize, usize); 5] = [(0, 1), (0, 2), (1, 2), (1, 3), (3, 0)];

/// Builds the defining set of L_k recursively. Splitting L_k into a 4×4
/// grid of blocks of side `2^(k-2)`: the five blocks under the base-case
/// boxes other than `(2, 2)` are taken whole, the south-east quadrant gets
/// the level `k-1` set, and each of the remaining seven blocks gets the
/// level `k-2` set.
pub fn tensor_defining_set(k: u32) -> Result<TensorDefiningSet> {
    if k > MAX_DEFINING_LEVEL {
        return Err(Error::InstanceTooLarge {
            what: "defining set level",
            size: k as usize,
            cap: MAX_DEFINING_LEVEL as usize,
        });
    }
    let mut positions = defining_positions(k);
    positions.sort_unstable();
    Ok(TensorDefiningSet { k, positions })
}

fn defining_positions(k: u32) -> Vec<(usize, usize)> {
    match k {
        0 => Vec::new(),
        1 => vec![(1, 0)],
        2 => LEVEL2.to_vec(),
        _ => {
            let b = 1usize << (k - 2);
            let mut out = Vec::new();
            for &(br, bc) in &FULL_BLOCKS {
                for i in 0..b {
                    for j in 0..b {
                        out.push((br * b + i, bc * b + j));
                    }
                }
            }
            out.extend(
                defining_positions(k - 1)
                    .into_iter()
                    .map(|(i, j)| (2 * b + i, 2 * b + j)),
            );
            let smaller = defining_positions(k - 2);
            for br in 0..4 {
                for bc in 0..4 {
                    let in_se = br >= 2 && bc >= 2;
                    if in_se || FULL_BLOCKS.contains(&(br, bc)) {
                        continue;
                    }
                    out.extend(smaller.iter().map(|&(i, j)| (br * b + i, bc * b + j)));
                }
            }
            out
        }
    }
}

/// `d_k` from `d_k = 4^(k-1) + 4^(k-2) + d_(k-1) + 7 d_(k-2)`, `d_0 = 0`, `d_1 = 1`.
pub fn tensor_defining_count(k: u32) -> u128 {
    let (mut prev2, mut prev1) = (0u128, 1u128);
    match k {
        0 => 0,
        1 => 1,
        _ => {
            for level in 2..=k {
                let next = (1u128 << (2 * level - 2)) + (1u128 << (2 * level - 4)) + prev1 + 7 * prev2;
                prev2 = prev1;
                prev1 = next;
            }
            prev1
        }
    }
}

/// Closed-form evaluation of `d_k` in floating point:
/// `n² - n^{log2 β}(√29+5)/(2√29) - (-1)^k n^{log2(-α)}(√29-5)/(2√29)`,
/// with `α, β = (1 ∓ √29)/2` and `n = 2^k`.
pub fn tensor_defining_closed_form(k: u32) -> f64 {
    let s = 29f64.sqrt();
    let alpha = (1.0 - s) / 2.0;
    let beta = (1.0 + s) / 2.0;
    let n = 2f64.powi(k as i32);
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    n * n - n.powf(beta.log2()) * (s + 5.0) / (2.0 * s) - sign * n.powf((-alpha).log2()) * (s - 5.0) / (2.0 * s)
}

/// Lower bound `6 · 4^(k-2)` (= `6n²/16`) on every GDS of L_k, `k >= 2`.
pub fn tensor_gds_lower_bound(k: u32) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("lower bound needs k >= 2, got {k}")));
    }
    Ok(6 * 4u64.pow(k - 2))
}

/// A random `p × q` Latin rectangle, filled row by row with randomized
/// backtracking (not uniform).
pub fn random_latin_rectangle(p: usize, q: usize, rng: &mut impl Rng) -> Result<LatinRectangle> {
    if p == 0 || p > q {
        return Err(Error::InvalidArgument(format!("need 1 <= p <= q, got {p}x{q}")));
    }
    let mut cells = vec![0u32; p * q];
    let mut row_used = vec![vec![false; q + 1]; p];
    let mut col_used = vec![vec![false; q + 1]; q];
    let mut choices: Vec<Vec<u32>> = Vec::with_capacity(p * q);
    let mut pos = 0;
    while pos < p * q {
        let (i, j) = (pos / q, pos % q);
        if choices.len() == pos {
            let mut opts: Vec<u32> = (1..=q as u32)
                .filter(|&e| !row_used[i][e as usize] && !col_used[j][e as usize])
                .collect();
            opts.shuffle(rng);
            choices.push(opts);
        }
        if cells[pos] != 0 {
            let e = cells[pos] as usize;
            row_used[i][e] = false;
            col_used[j][e] = false;
            cells[pos] = 0;
        }
        match choices[pos].pop() {
            Some(e) => {
                cells[pos] = e;
                row_used[i][e as usize] = true;
                col_used[j][e as usize] = true;
                pos += 1;
            }
            None => {
                choices.pop();
                if pos == 0 {
                    return Err(Error::InvalidArgument("no Latin rectangle exists".into()));
                }
                pos -= 1;
            }
        }
    }
    LatinRectangle::new(p, q, cells)
}
