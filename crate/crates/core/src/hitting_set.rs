//! Hitting sets over small set families.

use serde::{Deserialize, Serialize};

/// A family of sets over elements `0..universe`.
#[derive(Debug, Clone)]
pub struct SetFamily {
    universe: usize,
    sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingStats {
    pub family_size: usize,
    pub reduced_size: usize,
    pub nodes: u64,
    pub lower_bound: usize,
}

impl SetFamily {
    /// Members are sorted and deduplicated; duplicate sets are dropped.
    pub fn new(universe: usize, sets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        sets.sort();
        sets.dedup();
        Self { universe, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn is_hit_by(&self, chosen: &[usize]) -> bool {
        let mut mark = vec![false; self.universe];
        for &v in chosen {
            mark[v] = true;
        }
        self.sets.iter().all(|s| s.iter().any(|&v| mark[v]))
    }

    /// Drops every set that contains another member of the family; the
    /// hitting sets are unchanged.
    fn minimal_sets(&self) -> Vec<Vec<usize>> {
        let mut by_size = self.sets.clone();
        by_size.sort_by_key(Vec::len);
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for s in by_size {
            if !kept.iter().any(|k| is_subset(k, &s)) {
                kept.push(s);
            }
        }
        kept
    }

    /// Greedy max-coverage: repeatedly take the element hitting the most
    /// unhit sets (smallest index on ties).
    pub fn greedy(&self) -> Vec<usize> {
        let mut hit = vec![false; self.sets.len()];
        let mut chosen = Vec::new();
        let mut remaining = self.sets.len();
        let mut count = vec![0usize; self.universe];
        while remaining > 0 {
            count.fill(0);
            for (s, h) in self.sets.iter().zip(&hit) {
                if !h {
                    for &v in s {
                        count[v] += 1;
                    }
                }
            }
            let best = (0..self.universe)
                .max_by_key(|&v| (count[v], std::cmp::Reverse(v)))
                .expect("nonempty universe");
            assert!(count[best] > 0, "empty set in family");
            chosen.push(best);
            for (s, h) in self.sets.iter().zip(hit.iter_mut()) {
                if !*h && s.contains(&best) {
                    *h = true;
                    remaining -= 1;
                }
            }
        }
        chosen.sort_unstable();
        chosen
    }

    /// Any hitting set has at least this many elements.
    pub fn packing_lower_bound(&self) -> usize {
        let sets = self.minimal_sets();
        Search {
            sets: &sets,
            universe: self.universe,
            state: vec![Mark::Free; self.universe],
            chosen: Vec::new(),
            nodes: 0,
        }
        .packing_bound()
    }

    /// Minimum-cardinality hitting set by branch-and-bound: branch on the
    /// element of highest degree among unhit sets (take it / forbid it),
    /// bounded below by a greedy packing of pairwise disjoint unhit sets.
    pub fn minimum(&self) -> (Vec<usize>, HittingStats) {
        let sets = self.minimal_sets();
        let mut stats = HittingStats {
            family_size: self.sets.len(),
            reduced_size: sets.len(),
            ..Default::default()
        };
        let mut best = self.greedy();
        let mut search = Search {
            sets: &sets,
            universe: self.universe,
            state: vec![Mark::Free; self.universe],
            chosen: Vec::new(),
            nodes: 0,
        };
        let root_lb = search.packing_bound();
        stats.lower_bound = root_lb;
        if best.len() > root_lb {
            search.branch(&mut best);
        }
        stats.nodes = search.nodes;
        best.sort_unstable();
        (best, stats)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mark {
    Free,
    Taken,
    Forbidden,
}

struct Search<'a> {
    sets: &'a [Vec<usize>],
    universe: usize,
    state: Vec<Mark>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn is_hit(&self, s: &[usize]) -> bool {
        s.iter().any(|&v| self.state[v] == Mark::Taken)
    }

    fn free_members<'s>(&'s self, s: &'s [usize]) -> impl Iterator<Item = usize> + 's {
        s.iter().copied().filter(|&v| self.state[v] == Mark::Free)
    }

    /// Size of a greedily built packing of disjoint unhit sets (by free members).
    fn packing_bound(&self) -> usize {
        let mut used = vec![false; self.universe];
        let mut open: Vec<&Vec<usize>> = self.sets.iter().filter(|s| !self.is_hit(s)).collect();
        open.sort_by_key(|s| self.free_members(s).count());
        let mut count = 0;
        for s in open {
            if self.free_members(s).all(|v| !used[v]) {
                for v in self.free_members(s) {
                    used[v] = true;
                }
                count += 1;
            }
        }
        count
    }

    fn branch(&mut self, best: &mut Vec<usize>) {
        self.nodes += 1;
        let mut degree = vec![0usize; self.universe];
        let mut any_open = false;
        for s in self.sets {
            if self.is_hit(s) {
                continue;
            }
            any_open = true;
            let mut free = 0;
            for v in self.free_members(s) {
                degree[v] += 1;
                free += 1;
            }
            if free == 0 {
                return;
            }
        }
        if !any_open {
            if self.chosen.len() < best.len() {
                *best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + self.packing_bound() >= best.len() {
            return;
        }
        let pick = (0..self.universe)
            .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
            .expect("nonempty universe");
        self.state[pick] = Mark::Taken;
        self.chosen.push(pick);
        self.branch(best);
        self.chosen.pop();
        self.state[pick] = Mark::Forbidden;
        self.branch(best);
        self.state[pick] = Mark::Free;
    }
}
