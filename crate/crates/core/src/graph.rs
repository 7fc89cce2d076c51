//! Simple undirected graphs on at most 64 vertices, stored as one bit row per
//! vertex, plus the tree wrapper and BFS-based distance primitives.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold (one `u64` word per adjacency row).
pub const MAX_ORDER: usize = 64;

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::invalid_order(
                n,
                format!("graphs must have between 1 and {MAX_ORDER} vertices"),
            ));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        BitIter(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    fn all_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// The complement graph: same vertices, exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Bit mask of the vertices reachable from `src`.
    pub fn component_mask(&self, src: usize) -> u64 {
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == self.all_mask()
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_from(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            for v in BitIter(frontier) {
                dist[v] = Some(level);
            }
        }
        dist
    }

    /// All-pairs shortest-path lengths, one BFS per vertex.
    pub fn distances(&self) -> Result<DistanceMatrix> {
        let n = self.n;
        let mut d = vec![0u32; n * n];
        for src in 0..n {
            for (v, dv) in self.bfs_from(src).into_iter().enumerate() {
                d[src * n + v] = dv.ok_or(Error::Disconnected)?;
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn ecc_info(&self) -> Result<EccInfo> {
        Ok(self.distances()?.ecc_info())
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InconsistentParameters(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::InconsistentParameters(
                    "relabeling is not a permutation".into(),
                ));
            }
            seen |= 1 << p;
        }
        Graph::from_edges(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[inline]
fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// A connected graph with `n - 1` edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl Tree {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Tree::try_from(Graph::from_edges(n, edges)?)
    }

    pub fn as_graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// True for `K_{1,n-1}` with `n >= 3`, the trees whose complement is
    /// disconnected.
    pub fn is_star(&self) -> bool {
        let n = self.order();
        n >= 3 && (0..n).any(|v| self.degree(v) == n - 1)
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        Ok(Tree(self.0.relabel(perm)?))
    }
}

impl TryFrom<Graph> for Tree {
    type Error = Error;

    fn try_from(g: Graph) -> Result<Self> {
        let m = g.edge_count();
        if m + 1 != g.order() {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                m,
                g.order()
            )));
        }
        if !g.is_connected() {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(Tree(g))
    }
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Exact shortest-path lengths of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn ecc_info(&self) -> EccInfo {
        let ecc: Vec<u32> = (0..self.n)
            .map(|u| self.row(u).iter().copied().max().unwrap_or(0))
            .collect();
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        EccInfo { ecc, diameter }
    }
}

/// Per-vertex eccentricities and the diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccInfo {
    pub ecc: Vec<u32>,
    pub diameter: u32,
}

impl EccInfo {
    pub fn radius(&self) -> u32 {
        self.ecc.iter().copied().min().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges_and_orders() {
        assert!(matches!(Graph::empty(0), Err(Error::InvalidOrder { .. })));
        assert!(matches!(Graph::empty(65), Err(Error::InvalidOrder { .. })));
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn full_width_complement() {
        let g = Graph::empty(64).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 64 * 63 / 2);
        assert!(!c.adjacent(63, 63));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn path_distances_and_eccentricities() {
        let g = p4();
        let d = g.distances().unwrap();
        assert_eq!(d.get(0, 3), 3);
        let info = d.ecc_info();
        assert_eq!(info.ecc, vec![3, 2, 2, 3]);
        assert_eq!(info.diameter, 3);
        assert_eq!(info.radius(), 2);
    }

    #[test]
    fn complete_graph_distances() {
        let k4 = Graph::empty(4).unwrap().complement();
        let d = k4.distances().unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.distances(), Err(Error::Disconnected));
        assert_eq!(g.ecc_info(), Err(Error::Disconnected));
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn tree_validation() {
        assert!(Tree::from_edges(4, [(0, 1), (1, 2)]).is_err());
        assert!(Tree::from_edges(4, [(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::from_edges(1, []).is_ok());
        let star = Tree::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_star());
        assert!(!Tree::try_from(p4()).unwrap().is_star());
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = p4();
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
        let h = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h, g);
    }
}
