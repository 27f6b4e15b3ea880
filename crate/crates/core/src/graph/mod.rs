//! Simple undirected graphs on vertices `0..n` with bitmask adjacency.
//!
//! Each vertex owns a row of `words = ceil(n / 64)` machine words; bit `u`
//! of row `v` is set iff `uv` is an edge. Common-neighbour counts, and hence
//! edge multiplicities, reduce to word-wise `AND` plus popcount.

mod algebra;
mod canon;
mod connect;
mod format;

pub use algebra::{
    cartesian_product, complement, complete, cycle, delete_edge, delete_vertex, disjoint_union, empty,
    identify_vertices, induced_subgraph, join, octahedron, path, star, Identified, Induced,
};
pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use connect::{connected_components, cut_vertices, is_connected};
pub use format::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6, ParsedEdgeList};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge with normalized endpoints `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Rejects loops.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::Loop(a)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Disjoint vertex blocks, e.g. the sets a construction distinguishes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &v in blocks.iter().flatten() {
            if !seen.insert(v) {
                return Err(Error::InvalidParameters(format!(
                    "vertex {v} appears in two partition blocks"
                )));
            }
        }
        Ok(VertexPartition { blocks })
    }

    pub fn covered(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from endpoint pairs. Duplicates and reversed pairs
    /// collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Vertex count.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn size(&self) -> usize {
        let total: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as raw words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Inserts `ab`; returns `false` if it was already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::Loop(a));
        }
        let present = self.has_edge(a, b);
        self.set(a, b, true);
        Ok(!present)
    }

    /// Removes `ab`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let present = self.has_edge(a, b);
        self.set(a, b, false);
        Ok(present)
    }

    #[inline]
    pub(crate) fn set(&mut self, a: usize, b: usize, on: bool) {
        let w = self.words;
        let (ia, ib) = (a * w + b / 64, b * w + a / 64);
        if on {
            self.bits[ia] |= 1 << (b % 64);
            self.bits[ib] |= 1 << (a % 64);
        } else {
            self.bits[ia] &= !(1 << (b % 64));
            self.bits[ib] &= !(1 << (a % 64));
        }
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// `|N(a) ∩ N(b)|`, whether or not `ab` is an edge.
    #[inline]
    pub fn common_neighbor_count(&self, a: usize, b: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    pub fn common_neighbors(&self, a: usize, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, (x, y)) in self.row(a).iter().zip(self.row(b)).enumerate() {
            let mut m = x & y;
            while m != 0 {
                out.push(i * 64 + m.trailing_zeros() as usize);
                m &= m - 1;
            }
        }
        out
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| Edge { u, v }))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().map(|e| (e.u, e.v)).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Checks symmetry, irreflexivity and that no bits are set past `n`.
    pub fn validate(&self) -> Result<()> {
        for v in 0..self.n {
            if self.has_edge(v, v) {
                return Err(Error::Loop(v));
            }
            let row = self.row(v);
            let tail = self.n % 64;
            if tail != 0 && row[self.words - 1] >> tail != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: self.n,
                    n: self.n,
                });
            }
            if self.n == 0 && row.iter().any(|&w| w != 0) {
                return Err(Error::VertexOutOfRange { vertex: 0, n: 0 });
            }
            for u in self.neighbors(v) {
                if !self.has_edge(u, v) {
                    return Err(Error::InvalidParameters(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Returns the graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
        }
        let mut h = Graph::new(self.n);
        for e in self.edges() {
            h.set(perm[e.u], perm[e.v], true);
        }
        Ok(h)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Iterates the set bits of a multi-word mask in increasing order.
pub struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert!(g.is_complete());
        g.validate().unwrap();
    }

    #[test]
    fn loop_is_rejected() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::Loop(0)));
    }

    #[test]
    fn out_of_range_endpoint() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn symmetric_pairs_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn wide_rows() {
        let mut g = Graph::new(130);
        g.add_edge(0, 129).unwrap();
        g.add_edge(64, 129).unwrap();
        g.add_edge(0, 64).unwrap();
        assert_eq!(g.common_neighbor_count(0, 64), 1);
        assert_eq!(g.common_neighbors(0, 129), vec![64]);
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), vec![0, 64]);
        g.validate().unwrap();
    }

    #[test]
    fn edge_normalizes() {
        assert_eq!(Edge::new(5, 2).unwrap(), Edge { u: 2, v: 5 });
        assert!(Edge::new(1, 1).is_err());
    }
}
