//! Greedy defining sets.
//!
//! `S` is a greedy defining set (GDS) of `(G, τ, C)` when First-Fit on τ,
//! subject to the restriction of `C` to `S`, reproduces `C` exactly. Any `S`
//! meeting every descent of `(G, τ, C)` is one; conversely a set missing some
//! descent `{v} ∪ N` cannot be (when `v` is reached, no neighbor colored `x`
//! is colored yet, so `v` gets a color `≤ x`).

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::caps::{check_cap, Caps};
use crate::descent::{find_descents, Descent};
use crate::error::{Error, Result};
use crate::first_fit::{first_fit, first_fit_with_precoloring, Coloring, Precoloring};
use crate::graph::{cartesian_product, Graph, OrderedGraph, VertexOrder};
use crate::hitting_set::SetFamily;
use crate::ordering::{for_each_quasi_lex, lex_ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GdsMethod {
    HittingGreedy,
    HittingExact,
    Exhaustive,
    Dk,
    Lift,
    VertexCover,
    Given,
}

impl GdsMethod {
    pub fn name(self) -> &'static str {
        match self {
            Self::HittingGreedy => "hitting-greedy",
            Self::HittingExact => "hitting-exact",
            Self::Exhaustive => "exhaustive",
            Self::Dk => "dk",
            Self::Lift => "lift",
            Self::VertexCover => "vertex-cover",
            Self::Given => "given",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HittingMode {
    Greedy,
    Exact,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub descents: usize,
    pub family_size: usize,
    pub nodes: u64,
    pub lower_bound: usize,
    pub candidates_checked: u64,
}

/// A pinned vertex set with the verdict of replaying First-Fit against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GdsCertificate {
    pub domain: Vec<usize>,
    pub pinned: Precoloring,
    pub target: Coloring,
    pub k: u32,
    pub verified: bool,
    pub method: GdsMethod,
    pub stats: SearchStats,
}

impl GdsCertificate {
    pub fn size(&self) -> usize {
        self.domain.len()
    }
}

/// Replays First-Fit subject to `target` restricted to `domain`.
pub fn replay_gds(g: &Graph, order: &VertexOrder, target: &Coloring, domain: &[usize]) -> Result<Coloring> {
    first_fit_with_precoloring(g, order, &Precoloring::restrict(target, domain))
}

pub fn is_gds(g: &Graph, order: &VertexOrder, target: &Coloring, domain: &[usize]) -> Result<bool> {
    Ok(replay_gds(g, order, target, domain)?.colors() == target.colors())
}

/// Builds a certificate for `domain`, verifying it by full replay.
pub fn certify(
    g: &Graph,
    order: &VertexOrder,
    target: &Coloring,
    domain: Vec<usize>,
    method: GdsMethod,
    stats: SearchStats,
) -> Result<GdsCertificate> {
    target.check_proper(g)?;
    let mut domain = domain;
    domain.sort_unstable();
    domain.dedup();
    let verified = is_gds(g, order, target, &domain)?;
    Ok(GdsCertificate {
        pinned: Precoloring::restrict(target, &domain),
        domain,
        target: target.clone(),
        k: target.k(),
        verified,
        method,
        stats,
    })
}

/// The family `{v} ∪ N` over all descents.
pub fn descent_family(n: usize, descents: &[Descent]) -> SetFamily {
    SetFamily::new(n, descents.iter().map(Descent::members))
}

/// A set meeting every descent, pinned from `c` and verified by replay.
/// A failed replay is reported as [`Error::VerificationFailed`].
pub fn hitting_set_gds(
    g: &Graph,
    order: &VertexOrder,
    c: &Coloring,
    mode: HittingMode,
    caps: &Caps,
) -> Result<GdsCertificate> {
    let descents = find_descents(g, order, c)?;
    let family = descent_family(g.n(), &descents);
    let mut stats = SearchStats {
        descents: descents.len(),
        family_size: family.len(),
        ..Default::default()
    };
    let (domain, method) = match mode {
        HittingMode::Greedy => (family.greedy(), GdsMethod::HittingGreedy),
        HittingMode::Exact => {
            check_cap("descent family size", family.len(), caps.hitting_family)?;
            let (set, hs) = family.minimum();
            stats.nodes = hs.nodes;
            stats.lower_bound = hs.lower_bound;
            (set, GdsMethod::HittingExact)
        }
    };
    let cert = certify(g, order, c, domain, method, stats)?;
    if !cert.verified {
        return Err(Error::VerificationFailed(format!(
            "hitting set {:?} of the descent family does not reproduce the coloring",
            cert.domain
        )));
    }
    Ok(cert)
}

/// Smallest `S` whose replay reproduces `c`, by subset search in order of
/// size, every candidate checked by replay.
///
/// Sizes below the disjoint-descent packing bound are skipped. The candidate
/// pool is every vertex when `n <= caps.min_gds_vertices`, otherwise the
/// vertices lying on some descent.
pub fn minimum_gds(g: &Graph, order: &VertexOrder, c: &Coloring, caps: &Caps) -> Result<GdsCertificate> {
    let descents = find_descents(g, order, c)?;
    let family = descent_family(g.n(), &descents);
    let floor = family.packing_lower_bound();
    let pool: Vec<usize> = if g.n() <= caps.min_gds_vertices {
        (0..g.n()).collect()
    } else {
        let mut on_descent = vec![false; g.n()];
        for s in family.sets() {
            for &v in s {
                on_descent[v] = true;
            }
        }
        (0..g.n()).filter(|&v| on_descent[v]).collect()
    };
    let mut stats = SearchStats {
        descents: descents.len(),
        family_size: family.len(),
        lower_bound: floor,
        ..Default::default()
    };
    let mut budget = 0u64;
    for size in floor..=pool.len() {
        budget = budget.saturating_add(binomial(pool.len() as u64, size as u64));
        if budget > caps.min_gds_candidates {
            return Err(Error::InstanceTooLarge {
                what: "exhaustive GDS candidate count",
                size: budget.min(usize::MAX as u64) as usize,
                cap: caps.min_gds_candidates.min(usize::MAX as u64) as usize,
            });
        }
        for subset in pool.iter().copied().combinations(size) {
            stats.candidates_checked += 1;
            if is_gds(g, order, c, &subset)? {
                return certify(g, order, c, subset, GdsMethod::Exhaustive, stats);
            }
        }
    }
    Err(Error::VerificationFailed(
        "pinning every candidate vertex does not reproduce the coloring".into(),
    ))
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Outcome of checking First-Fit and GDS status across every quasi-lex
/// ordering of G□H against lex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiLexVerdict {
    pub orderings: u64,
    pub ff_mismatches: u64,
    /// GDS status of each tested set under lex.
    pub gds_under_lex: Vec<bool>,
    pub gds_mismatches: u64,
}

impl QuasiLexVerdict {
    pub fn holds(&self) -> bool {
        self.ff_mismatches == 0 && self.gds_mismatches == 0
    }
}

/// For every quasi-lex τ: the First-Fit coloring under τ equals the one under
/// lex, and each set in `sets` is a GDS of `(G□H, τ, c)` iff it is one under lex.
pub fn check_quasi_lex_gds_equivalence(
    g: &OrderedGraph,
    h: &OrderedGraph,
    c: &Coloring,
    sets: &[Vec<usize>],
    caps: &Caps,
) -> Result<QuasiLexVerdict> {
    let product = cartesian_product(&g.graph, &h.graph)?;
    if product.n() > caps.enumeration {
        return Err(Error::EnumerationTooLarge {
            size: product.n(),
            cap: caps.enumeration,
        });
    }
    c.check_proper(&product.graph)?;
    let lex = lex_ordering(g, h);
    let ff_lex = first_fit(&product.graph, &lex.order);
    let gds_under_lex = sets
        .iter()
        .map(|s| is_gds(&product.graph, &lex.order, c, s))
        .collect::<Result<Vec<_>>>()?;
    let mut ff_mismatches = 0;
    let mut gds_mismatches = 0;
    let mut failure = None;
    let orderings = for_each_quasi_lex(g, h, caps.enumeration, |scan| {
        let tau = VertexOrder::from_scan(scan.to_vec()).expect("extension is a permutation");
        if first_fit(&product.graph, &tau) != ff_lex {
            ff_mismatches += 1;
        }
        for (s, &under_lex) in sets.iter().zip(&gds_under_lex) {
            match is_gds(&product.graph, &tau, c, s) {
                Ok(v) if v == under_lex => {}
                Ok(_) => gds_mismatches += 1,
                Err(e) => failure = Some(e),
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(QuasiLexVerdict {
        orderings,
        ff_mismatches,
        gds_under_lex,
        gds_mismatches,
    })
}
