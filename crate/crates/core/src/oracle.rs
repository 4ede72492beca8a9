//! Exact small-graph oracles: independence number and chromatic number.
//!
//! Both work on 64-bit neighborhood masks and refuse instances above their cap.

use crate::caps::{check_cap, Caps};
use crate::error::Result;
use crate::graph::Graph;

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.mask64(v)).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// α(G), by branching on a vertex of maximum degree inside the candidate set.
pub fn independence_number(g: &Graph, caps: &Caps) -> Result<usize> {
    Ok(maximum_independent_set(g, caps)?.len())
}

/// A maximum independent set of `g`, sorted.
pub fn maximum_independent_set(g: &Graph, caps: &Caps) -> Result<Vec<usize>> {
    check_cap("independence oracle vertex count", g.n(), caps.independence.min(64))?;
    let set = max_independent(&masks(g), full_mask(g.n()));
    Ok((0..g.n()).filter(|&v| set >> v & 1 == 1).collect())
}

pub(crate) fn max_independent(adj: &[u64], candidates: u64) -> u64 {
    if candidates == 0 {
        return 0;
    }
    let mut best_v = candidates.trailing_zeros() as usize;
    let mut best_deg = 0;
    let mut bits = candidates;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & candidates).count_ones();
        if d == 0 {
            // isolated in the candidate set: always take it
            return 1 << v | max_independent(adj, candidates & !(1 << v));
        }
        if d > best_deg {
            best_deg = d;
            best_v = v;
        }
    }
    if best_deg <= 1 {
        // a perfect matching on the candidates: take one end of each edge
        let v = candidates.trailing_zeros() as usize;
        return 1 << v | max_independent(adj, candidates & !(1 << v) & !adj[v]);
    }
    let v = best_v;
    let with = 1 << v | max_independent(adj, candidates & !(1 << v) & !adj[v]);
    let without = max_independent(adj, candidates & !(1 << v));
    if with.count_ones() >= without.count_ones() {
        with
    } else {
        without
    }
}

/// χ(G): smallest k admitting a proper k-coloring.
pub fn chromatic_number(g: &Graph, caps: &Caps) -> Result<usize> {
    check_cap("chromatic oracle vertex count", g.n(), caps.chromatic.min(64))?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let adj = masks(g);
    let mut colors = vec![0u32; n];
    for k in 2..=n as u32 {
        colors.fill(0);
        if colorable(&adj, &mut colors, k, 0) {
            return Ok(k as usize);
        }
    }
    Ok(n)
}

/// DSATUR-ordered backtracking; `used` is the largest color opened so far.
fn colorable(adj: &[u64], colors: &mut [u32], k: u32, used: u32) -> bool {
    let n = colors.len();
    let mut pick = None;
    let mut pick_key = (0u32, 0u32);
    for v in (0..n).filter(|&v| colors[v] == 0) {
        let mut seen = 0u64;
        let mut nb = adj[v];
        let mut uncolored_deg = 0;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] == 0 {
                uncolored_deg += 1;
            } else {
                seen |= 1 << colors[u];
            }
        }
        let key = (seen.count_ones(), uncolored_deg);
        if pick.is_none() || key > pick_key {
            pick = Some((v, seen));
            pick_key = key;
        }
    }
    let Some((v, seen)) = pick else {
        return true;
    };
    let limit = (used + 1).min(k);
    for c in 1..=limit {
        if seen >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        if colorable(adj, colors, k, used.max(c)) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, complete_graph, cycle_graph, path_graph};

    /// Exhaustive subset check.
    fn alpha_brute(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (0..n).all(|v| s >> v & 1 == 0 || !g.has_edge(u, v))))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn independence_examples() {
        let caps = Caps::default();
        assert_eq!(independence_number(&complete_graph(4).unwrap(), &caps).unwrap(), 1);
        assert_eq!(independence_number(&path_graph(3).unwrap(), &caps).unwrap(), 2);
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(alpha_brute(&c4), 2);
        assert_eq!(independence_number(&c4, &caps).unwrap(), 2);
    }

    #[test]
    fn chromatic_examples() {
        let caps = Caps::default();
        assert_eq!(chromatic_number(&complete_graph(5).unwrap(), &caps).unwrap(), 5);
        assert_eq!(chromatic_number(&cycle_graph(4).unwrap(), &caps).unwrap(), 2);
        assert_eq!(chromatic_number(&cycle_graph(5).unwrap(), &caps).unwrap(), 3);
        let k3 = complete_graph(3).unwrap();
        let p = cartesian_product(&k3, &k3).unwrap();
        assert_eq!(chromatic_number(&p.graph, &caps).unwrap(), 3);
    }

    #[test]
    fn caps_enforced() {
        let caps = Caps::default();
        let big = path_graph(21).unwrap();
        assert!(independence_number(&big, &caps).is_err());
        assert!(chromatic_number(&path_graph(17).unwrap(), &caps).is_err());
    }

    #[test]
    fn independence_matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let caps = Caps::default();
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let mut g = Graph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            assert_eq!(independence_number(&g, &caps).unwrap(), alpha_brute(&g));
        }
    }
}
