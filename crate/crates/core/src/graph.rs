//! Finite simple graphs, vertex orderings and Cartesian products.

use crate::error::{Error, Result};

/// Largest vertex count any [`Graph`] may have.
pub const MAX_VERTICES: usize = 4096;

/// Iterator over the set bits of a packed row.
#[derive(Clone)]
pub struct Bits<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Bits<'a> {
    fn new(words: &'a [u64]) -> Self {
        Self {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Undirected simple graph on vertices `0..n`, stored as packed adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InstanceTooLarge {
                what: "vertex count",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        let words = n.div_ceil(64);
        Ok(Self {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Loops and out-of-range endpoints are rejected;
    /// re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge(u, v));
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> Bits<'_> {
        Bits::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Neighborhood of `v` as a single word; only valid when `n <= 64`.
    pub(crate) fn mask64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }
}

/// K_n.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// P_n: the path 0-1-...-(n-1).
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// C_n for n >= 3.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// A total order on the vertices of a graph. `scan()[i]` is the vertex with
/// rank `i`, and `rank(v)` inverts it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrder {
    scan: Vec<usize>,
    rank: Vec<usize>,
}

impl VertexOrder {
    /// Builds an order from the scan sequence; it must be a permutation of `0..len`.
    pub fn from_scan(scan: Vec<usize>) -> Result<Self> {
        let n = scan.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in scan.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range 0..{n}")));
            }
            if rank[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} listed twice")));
            }
            rank[v] = i;
        }
        Ok(Self { scan, rank })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            scan: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        let scan: Vec<usize> = self.scan.iter().rev().copied().collect();
        let mut rank = vec![0; scan.len()];
        for (i, &v) in scan.iter().enumerate() {
            rank[v] = i;
        }
        Self { scan, rank }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.scan.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.scan.is_empty()
    }

    #[inline]
    pub fn scan(&self) -> &[usize] {
        &self.scan
    }

    #[inline]
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }
}

/// A graph together with a scan order, the pair (G, σ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    pub graph: Graph,
    pub order: VertexOrder,
}

impl OrderedGraph {
    pub fn new(graph: Graph, order: VertexOrder) -> Result<Self> {
        if graph.n() != order.len() {
            return Err(Error::DimensionMismatch {
                expected: graph.n(),
                found: order.len(),
            });
        }
        Ok(Self { graph, order })
    }

    /// Ordered by vertex index.
    pub fn natural(graph: Graph) -> Self {
        let order = VertexOrder::identity(graph.n());
        Self { graph, order }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// The Cartesian product G□H. Vertex `(g, h)` has index `g * n_h + h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    n_g: usize,
    n_h: usize,
}

impl ProductGraph {
    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.n_g, self.n_h)
    }

    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.n_h, v % self.n_h)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// Builds G□H: `(u,v) ~ (u',v')` iff `u = u'` and `v ~ v'`, or `u ~ u'` and `v = v'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::EmptyFactor);
    }
    let (n_g, n_h) = (g.n(), h.n());
    let mut graph = Graph::new(n_g * n_h)?;
    for a in 0..n_g {
        for (b1, b2) in h.edges() {
            graph.add_edge(a * n_h + b1, a * n_h + b2)?;
        }
    }
    for (a1, a2) in g.edges() {
        for b in 0..n_h {
            graph.add_edge(a1 * n_h + b, a2 * n_h + b)?;
        }
    }
    Ok(ProductGraph { graph, n_g, n_h })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_square_is_c4() {
        let k2 = complete_graph(2).unwrap();
        let p = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.graph.edge_count(), 4);
        assert!((0..4).all(|v| p.graph.degree(v) == 2));
        // 4-cycle: (0,0)-(0,1)-(1,1)-(1,0)
        let c4 = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert_eq!(p.graph, c4);
    }

    #[test]
    fn k3_square_counts() {
        let k3 = complete_graph(3).unwrap();
        let p = cartesian_product(&k3, &k3).unwrap();
        assert_eq!(p.n(), 9);
        assert_eq!(p.graph.edge_count(), 3 * 3 + 3 * 3);
        assert!((0..9).all(|v| p.graph.degree(v) == 4));
    }

    #[test]
    fn k1_is_identity_factor() {
        let k1 = complete_graph(1).unwrap();
        let h = path_graph(5).unwrap();
        assert_eq!(cartesian_product(&k1, &h).unwrap().graph, h);
        assert_eq!(cartesian_product(&h, &k1).unwrap().graph, h);
    }

    #[test]
    fn empty_factor_rejected() {
        let empty = Graph::new(0).unwrap();
        let k2 = complete_graph(2).unwrap();
        assert_eq!(cartesian_product(&empty, &k2), Err(Error::EmptyFactor));
        assert_eq!(cartesian_product(&k2, &empty), Err(Error::EmptyFactor));
    }

    #[test]
    fn complete_graph_basics() {
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(4).unwrap().edge_count(), 6);
        assert_eq!(complete_graph(3).unwrap().max_degree(), 2);
        assert_eq!(complete_graph(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn bad_edges_rejected() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::InvalidEdge(1, 1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::InvalidEdge(0, 3)));
        assert!(Graph::new(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn neighbors_across_word_boundary() {
        let mut g = Graph::new(130).unwrap();
        g.add_edge(0, 63).unwrap();
        g.add_edge(0, 64).unwrap();
        g.add_edge(0, 129).unwrap();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![63, 64, 129]);
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), vec![0]);
        assert_eq!(g.neighbors(5).count(), 0);
    }

    #[test]
    fn vertex_order_validation() {
        assert!(VertexOrder::from_scan(vec![1, 0, 2]).is_ok());
        assert!(VertexOrder::from_scan(vec![1, 1, 2]).is_err());
        assert!(VertexOrder::from_scan(vec![0, 3]).is_err());
        let o = VertexOrder::from_scan(vec![2, 0, 1]).unwrap();
        assert_eq!(o.rank(2), 0);
        assert_eq!(o.reversed().scan(), &[1, 0, 2]);
        assert_eq!(o.reversed().rank(1), 0);
    }
}
