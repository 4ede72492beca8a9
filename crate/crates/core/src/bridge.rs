//! Relating First-Fit data of the factors to the product.
//!
//! Every equality here is computed along two independent paths (the full
//! product engine against the complete-graph shortcut) so one bug cannot
//! satisfy it vacuously.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::caps::{check_cap, Caps};
use crate::descent::is_descent_free;
use crate::error::{Error, Result};
use crate::first_fit::{first_fit, grundy_number, Coloring};
use crate::gds::{certify, is_gds, GdsCertificate, GdsMethod, SearchStats};
use crate::graph::{cartesian_product, complete_graph, Graph, OrderedGraph, ProductGraph, VertexOrder};
use crate::latin::{rectangle_gds_bound, rectangle_gds_via_cover, LatinRectangle};
use crate::oracle::{chromatic_number, independence_number};
use crate::ordering::lex_ordering;

/// Serializable description of an ordered graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDesc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub order: Vec<usize>,
}

impl From<&OrderedGraph> for GraphDesc {
    fn from(g: &OrderedGraph) -> Self {
        Self {
            n: g.n(),
            edges: g.graph.edges().collect(),
            order: g.order.scan().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionBounds {
    /// `Γ(G) + Γ(H) - 1`.
    pub grundy_sum: Option<usize>,
    /// `2Γ(G) - 2` when both factors are the same graph and `Γ(G) >= 2`.
    pub grundy_square: Option<usize>,
    /// `2^⌈log2 p⌉` when both factors are the same ordered graph.
    pub power_formula: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionVerdicts {
    pub complete_reduction: bool,
    pub grundy_sum: Option<bool>,
    pub grundy_square: Option<bool>,
    pub power_formula: Option<bool>,
}

impl ReductionVerdicts {
    pub fn all_hold(&self) -> bool {
        self.complete_reduction
            && self.grundy_sum != Some(false)
            && self.grundy_square != Some(false)
            && self.power_formula != Some(false)
    }
}

/// One instance of the factor-to-product reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub g: GraphDesc,
    pub h: GraphDesc,
    pub p: u32,
    pub q: u32,
    pub ff_product: u32,
    pub ff_complete: u32,
    pub grundy_g: Option<usize>,
    pub grundy_h: Option<usize>,
    pub bounds: ReductionBounds,
    pub verdicts: ReductionVerdicts,
}

fn complete_cache() -> &'static Mutex<HashMap<(usize, usize), u32>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), u32>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// FF(K_p□K_q, lex), replayed on the engine and memoized.
pub fn complete_product_ff(p: usize, q: usize) -> Result<u32> {
    if let Some(&k) = complete_cache().lock().expect("cache lock").get(&(p, q)) {
        return Ok(k);
    }
    let kp = OrderedGraph::natural(complete_graph(p)?);
    let kq = OrderedGraph::natural(complete_graph(q)?);
    let product = cartesian_product(&kp.graph, &kq.graph)?;
    let k = first_fit(&product.graph, &lex_ordering(&kp, &kq).order).k();
    complete_cache().lock().expect("cache lock").insert((p, q), k);
    Ok(k)
}

/// FF(G□H, lex) on the full product.
pub fn product_lex_ff(g: &OrderedGraph, h: &OrderedGraph) -> Result<Coloring> {
    let product = cartesian_product(&g.graph, &h.graph)?;
    Ok(first_fit(&product.graph, &lex_ordering(g, h).order))
}

/// `2^⌈log2 p⌉` for `p >= 1`.
pub fn power_of_two_ceiling(p: u32) -> u32 {
    p.max(1).next_power_of_two()
}

/// Computes both sides of the reduction and the Grundy bounds, recording
/// verdicts without failing. Γ values are computed when the factor sizes
/// are within `caps.grundy`, unless supplied.
pub fn evaluate_reduction(
    g: &OrderedGraph,
    h: &OrderedGraph,
    grundy: (Option<usize>, Option<usize>),
    caps: &Caps,
) -> Result<ReductionReport> {
    let p = first_fit(&g.graph, &g.order).k();
    let q = first_fit(&h.graph, &h.order).k();
    let ff_product = product_lex_ff(g, h)?.k();
    let ff_complete = complete_product_ff(p as usize, q as usize)?;
    let oracle = |x: &OrderedGraph, given: Option<usize>| -> Result<Option<usize>> {
        match given {
            Some(v) => Ok(Some(v)),
            None if x.n() <= caps.grundy => grundy_number(&x.graph, caps).map(Some),
            None => Ok(None),
        }
    };
    let grundy_g = oracle(g, grundy.0)?;
    let grundy_h = oracle(h, grundy.1)?;
    let grundy_sum = grundy_g.zip(grundy_h).map(|(a, b)| a + b - 1);
    // 2Γ - 2 is only meaningful from Γ = 2 on: K_1□K_1 needs one color.
    let grundy_square = grundy_g.filter(|&a| g.graph == h.graph && a >= 2).map(|a| 2 * a - 2);
    let power_formula = (g == h).then(|| power_of_two_ceiling(p));
    let verdicts = ReductionVerdicts {
        complete_reduction: ff_product == ff_complete,
        grundy_sum: grundy_sum.map(|b| ff_product as usize <= b),
        grundy_square: grundy_square.map(|b| ff_product as usize <= b),
        power_formula: power_formula.map(|v| ff_product == v),
    };
    Ok(ReductionReport {
        g: g.into(),
        h: h.into(),
        p,
        q,
        ff_product,
        ff_complete,
        grundy_g,
        grundy_h,
        bounds: ReductionBounds {
            grundy_sum,
            grundy_square,
            power_formula,
        },
        verdicts,
    })
}

/// [`evaluate_reduction`], failing with [`Error::VerificationFailed`] when
/// any verdict is false.
pub fn reduction_report(g: &OrderedGraph, h: &OrderedGraph, caps: &Caps) -> Result<ReductionReport> {
    let report = evaluate_reduction(g, h, (None, None), caps)?;
    if !report.verdicts.all_hold() {
        return Err(Error::VerificationFailed(format!(
            "reduction verdicts failed: FF(G□H, lex) = {}, FF(K_{}□K_{}, lex) = {}, {:?}",
            report.ff_product, report.p, report.q, report.ff_complete, report.verdicts
        )));
    }
    Ok(report)
}

/// The product coloring induced by a rectangle together with the lifted set.
#[derive(Debug, Clone)]
pub struct Lift {
    pub product: ProductGraph,
    pub order: VertexOrder,
    /// Vertex `(g, h)` in class `C_i × D_j` gets `r[i][j]`.
    pub coloring: Coloring,
    pub certificate: GdsCertificate,
    /// Colors used by the replay subject to the lifted set.
    pub replay_colors: u32,
}

/// Lifts a set of cells `s` of a `p × q` rectangle `r` (with `p = FF(G)`,
/// `q = FF(H)`) to `⋃ C_i × D_j` over `(i, j) ∈ s`, where `C_i`, `D_j`
/// are the First-Fit color classes of the factors, and replays it.
/// Never fails on a negative replay; see [`lift_latin_gds`].
pub fn lift_latin_set(g: &OrderedGraph, h: &OrderedGraph, r: &LatinRectangle, s: &[usize]) -> Result<Lift> {
    let fg = first_fit(&g.graph, &g.order);
    let fh = first_fit(&h.graph, &h.order);
    let (p, q) = (fg.k() as usize, fh.k() as usize);
    if (r.rows(), r.cols()) != (p, q) {
        return Err(Error::InvalidArgument(format!(
            "rectangle is {}x{} but the factors need {p}x{q}",
            r.rows(),
            r.cols()
        )));
    }
    if let Some(&bad) = s.iter().find(|&&c| c >= p * q) {
        return Err(Error::InvalidArgument(format!(
            "cell {bad} outside the {p}x{q} rectangle"
        )));
    }
    let (rect_product, rect_order) = r.product()?;
    if !is_gds(&rect_product.graph, &rect_order, &r.to_coloring()?, s)? {
        return Err(Error::InvalidArgument("cell set is not a GDS of the rectangle".into()));
    }
    let product = cartesian_product(&g.graph, &h.graph)?;
    let order = lex_ordering(g, h).order;
    let n_h = h.n();
    let colors: Vec<u32> = (0..product.n())
        .map(|v| r.get(fg.color(v / n_h) as usize - 1, fh.color(v % n_h) as usize - 1))
        .collect();
    let coloring = Coloring::new(colors)?;
    let mut in_s = vec![false; p * q];
    for &c in s {
        in_s[c] = true;
    }
    let domain: Vec<usize> = (0..product.n())
        .filter(|&v| in_s[(fg.color(v / n_h) as usize - 1) * q + fh.color(v % n_h) as usize - 1])
        .collect();
    let certificate = certify(
        &product.graph,
        &order,
        &coloring,
        domain,
        GdsMethod::Lift,
        SearchStats::default(),
    )?;
    let replay = crate::gds::replay_gds(&product.graph, &order, &coloring, &certificate.domain)?;
    Ok(Lift {
        replay_colors: replay.k(),
        product,
        order,
        coloring,
        certificate,
    })
}

/// [`lift_latin_set`], failing with [`Error::VerificationFailed`] unless the
/// lifted set reproduces the induced coloring with exactly `q` colors.
pub fn lift_latin_gds(g: &OrderedGraph, h: &OrderedGraph, r: &LatinRectangle, s: &[usize]) -> Result<Lift> {
    let lift = lift_latin_set(g, h, r, s)?;
    if !lift.certificate.verified || lift.replay_colors as usize != r.cols() {
        return Err(Error::VerificationFailed(format!(
            "lifted set of size {} does not reproduce the induced coloring (replay used {} colors)",
            lift.certificate.size(),
            lift.replay_colors
        )));
    }
    Ok(lift)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductBoundReport {
    pub p: usize,
    pub q: usize,
    pub alpha_g: usize,
    pub alpha_h: usize,
    /// `α(G) α(H) · rectangle_gds_bound(p, q)`.
    pub bound: f64,
    pub rectangle_gds_size: usize,
    pub witness_size: usize,
    pub witness_within_bound: bool,
    pub witness_verified: bool,
}

/// Upper bound on a `q`-GDS of (G□H, lex) with a constructive witness: the
/// cover GDS of `r` lifted to the product. Needs `2 <= p <= q`.
pub fn product_gds_bound(
    g: &OrderedGraph,
    h: &OrderedGraph,
    r: &LatinRectangle,
    caps: &Caps,
) -> Result<ProductBoundReport> {
    let p = first_fit(&g.graph, &g.order).k() as usize;
    let q = first_fit(&h.graph, &h.order).k() as usize;
    if p < 2 {
        return Err(Error::InvalidArgument(format!("bound needs FF(G) >= 2, got {p}")));
    }
    if p > q {
        return Err(Error::InvalidArgument(format!(
            "bound needs FF(G) <= FF(H), got {p} > {q}"
        )));
    }
    let alpha_g = independence_number(&g.graph, caps)?;
    let alpha_h = independence_number(&h.graph, caps)?;
    let bound = (alpha_g * alpha_h) as f64 * rectangle_gds_bound(p, q)?;
    let cover = rectangle_gds_via_cover(r, caps)?;
    let lift = lift_latin_set(g, h, r, &cover.certificate.domain)?;
    let witness_size = lift.certificate.size();
    Ok(ProductBoundReport {
        p,
        q,
        alpha_g,
        alpha_h,
        bound,
        rectangle_gds_size: cover.certificate.size(),
        witness_size,
        witness_within_bound: witness_size as f64 <= bound,
        witness_verified: lift.certificate.verified && lift.replay_colors as usize == q,
    })
}

/// `r[i][j] = (i + j) mod q + 1`, the first `p` rows of the cyclic square.
pub fn cyclic_rectangle(p: usize, q: usize) -> Result<LatinRectangle> {
    LatinRectangle::new(
        p,
        q,
        (0..p)
            .flat_map(|i| (0..q).map(move |j| ((i + j) % q) as u32 + 1))
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentFreeOptimumVerdict {
    pub chi: usize,
    pub ff_square: u32,
    pub colorings_examined: u64,
    pub exhaustive: bool,
    pub descent_free_found: u64,
    pub holds: bool,
}

/// Looks for descent-free proper colorings of (G□G, lex) with `χ(G□G)`
/// colors; for each one found, checks that `FF(G□G, lex) = χ` and that it
/// is a power of two.
///
/// Enumerates all such colorings while there are at most
/// `caps.coloring_enumeration`; otherwise samples `samples` random ones.
pub fn check_descent_free_optimum(
    g: &OrderedGraph,
    caps: &Caps,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<DescentFreeOptimumVerdict> {
    let product = cartesian_product(&g.graph, &g.graph)?;
    check_cap("descent-free optimum vertex count", product.n(), caps.chromatic)?;
    let chi = chromatic_number(&product.graph, caps)?;
    let order = lex_ordering(g, g).order;
    let ff_square = first_fit(&product.graph, &order).k();
    let mut found = 0u64;
    let mut examined = 0u64;
    let mut check = |colors: &[u32]| -> Result<()> {
        examined += 1;
        let c = Coloring::normalized(colors);
        if c.k() as usize == chi && is_descent_free(&product.graph, &order, &c)? {
            found += 1;
        }
        Ok(())
    };
    let enumerated = enumerate_colorings(&product.graph, order.scan(), chi as u32, caps.coloring_enumeration);
    let exhaustive = enumerated.is_some();
    match enumerated {
        Some(all) => {
            for c in &all {
                check(c)?;
            }
        }
        None => {
            for _ in 0..samples {
                if let Some(c) = random_coloring_with(&product.graph, chi as u32, rng) {
                    check(&c)?;
                }
            }
        }
    }
    let power = ff_square.is_power_of_two();
    Ok(DescentFreeOptimumVerdict {
        chi,
        ff_square,
        colorings_examined: examined,
        exhaustive,
        descent_free_found: found,
        holds: found == 0 || (ff_square as usize == chi && power),
    })
}

/// All proper colorings using exactly the colors `1..=k`, or `None` past `cap`.
fn enumerate_colorings(g: &Graph, scan: &[usize], k: u32, cap: usize) -> Option<Vec<Vec<u32>>> {
    fn go(
        g: &Graph,
        scan: &[usize],
        k: u32,
        pos: usize,
        colors: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> bool {
        if pos == scan.len() {
            let mut used = vec![false; k as usize + 1];
            colors.iter().for_each(|&c| used[c as usize] = true);
            if used[1..].iter().all(|&u| u) {
                if out.len() >= cap {
                    return false;
                }
                out.push(colors.clone());
            }
            return true;
        }
        let v = scan[pos];
        for c in 1..=k {
            if g.neighbors(v).all(|u| colors[u] != c) {
                colors[v] = c;
                if !go(g, scan, k, pos + 1, colors, out, cap) {
                    return false;
                }
                colors[v] = 0;
            }
        }
        true
    }
    let mut out = Vec::new();
    let mut colors = vec![0; g.n()];
    go(g, scan, k, 0, &mut colors, &mut out, cap).then_some(out)
}

/// A proper coloring with colors `1..=k` found by randomized backtracking.
fn random_coloring_with(g: &Graph, k: u32, rng: &mut impl Rng) -> Option<Vec<u32>> {
    fn go(g: &Graph, scan: &[usize], k: u32, pos: usize, colors: &mut Vec<u32>, rng: &mut impl Rng) -> bool {
        if pos == scan.len() {
            return true;
        }
        let v = scan[pos];
        let mut palette: Vec<u32> = (1..=k).collect();
        palette.shuffle(rng);
        for c in palette {
            if g.neighbors(v).all(|u| colors[u] != c) {
                colors[v] = c;
                if go(g, scan, k, pos + 1, colors, rng) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }
    let mut scan: Vec<usize> = (0..g.n()).collect();
    scan.shuffle(rng);
    let mut colors = vec![0; g.n()];
    go(g, &scan, k, 0, &mut colors, rng).then_some(colors)
}
