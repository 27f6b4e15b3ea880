//! Edge multiplicity (triangle support), k-dense subgraphs by peeling, and
//! the k*-density index.
//!
//! The multiplicity of an edge `uv` is `|N(u) ∩ N(v)|`, the number of
//! triangles through it. `D_k(G)` is the unique maximal subgraph in which
//! every edge has multiplicity at least `k - 2`, measured inside the
//! subgraph, with isolated vertices dropped. Its connected components are
//! the k-dense communities. `G` is k*-dense when `D_k(G) = G` but
//! `D_{k+1}(G) ≠ G`, which for a graph without isolated vertices means
//! `k* = 2 + min multiplicity`.

mod checks;
mod flow;
mod hierarchy;
mod oracle;
mod report;

pub use checks::{
    check_propositions, classify_special, ClassLabel, Classification, PropositionCheck, PropositionReport,
};
pub use flow::{edge_connectivity, vertex_connectivity};
pub use hierarchy::{clique_number, core_number, hierarchy_report, k_core, maximal_cliques, HierarchyReport};
pub use oracle::{brute_force_k_dense, BruteForceDense, BRUTE_FORCE_LIMIT};
pub use report::{analyze, AnalysisReport, CommunityLevel};

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, induced_subgraph, Edge, Graph};

/// Triangle support of every edge, in edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMultiplicityMap {
    entries: Vec<(Edge, usize)>,
}

impl EdgeMultiplicityMap {
    pub fn get(&self, e: Edge) -> Option<usize> {
        self.entries
            .binary_search_by_key(&e, |&(x, _)| x)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.entries.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.entries.iter().map(|&(_, m)| m).min()
    }

    /// `hist[m]` = number of edges with multiplicity `m`.
    pub fn histogram(&self) -> Vec<usize> {
        let top = self.entries.iter().map(|&(_, m)| m).max();
        let mut hist = vec![0; top.map_or(0, |t| t + 1)];
        for &(_, m) in &self.entries {
            hist[m] += 1;
        }
        hist
    }
}

pub fn edge_multiplicity(g: &Graph, e: Edge) -> Result<usize> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::NotAnEdge(e.u, e.v));
    }
    Ok(g.common_neighbor_count(e.u, e.v))
}

pub fn all_multiplicities(g: &Graph) -> EdgeMultiplicityMap {
    let entries = g.edges().map(|e| (e, g.common_neighbor_count(e.u, e.v))).collect();
    EdgeMultiplicityMap { entries }
}

/// Minimum multiplicity over all edges; `None` for edgeless graphs.
pub fn min_multiplicity(g: &Graph) -> Option<usize> {
    g.edges().map(|e| g.common_neighbor_count(e.u, e.v)).min()
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}

/// `D_k(G) = G`: at least one vertex, none isolated, and every edge in at
/// least `k - 2` triangles.
pub fn is_k_dense(g: &Graph, k: usize) -> Result<bool> {
    check_k(k)?;
    if g.order() == 0 || (0..g.order()).any(|v| g.degree(v) == 0) {
        return Ok(false);
    }
    Ok(min_multiplicity(g).is_some_and(|m| m + 2 >= k))
}

/// The k* of a graph, or undefined for the null graph and for graphs with
/// an isolated vertex (including `K_1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DensityIndex(Option<usize>);

impl DensityIndex {
    pub const UNDEFINED: DensityIndex = DensityIndex(None);

    pub fn defined(k: usize) -> Self {
        DensityIndex(Some(k))
    }

    pub fn get(self) -> Option<usize> {
        self.0
    }

    pub fn is_defined(self) -> bool {
        self.0.is_some()
    }
}

impl fmt::Display for DensityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "undefined"),
        }
    }
}

pub fn density_index(g: &Graph) -> DensityIndex {
    if g.order() == 0 || (0..g.order()).any(|v| g.degree(v) == 0) {
        return DensityIndex::UNDEFINED;
    }
    DensityIndex(min_multiplicity(g).map(|m| m + 2))
}

/// `D_k(G)` on the original labels: the surviving vertices and edges, and
/// the edge-subgraph itself on all `n` labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseSubgraph {
    pub k: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub graph: Graph,
}

impl DenseSubgraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether the subgraph is all of `g`.
    pub fn covers(&self, g: &Graph) -> bool {
        self.vertices.len() == g.order() && self.edges.len() == g.size()
    }

    /// Connected components, largest first, ties by smallest vertex.
    pub fn communities(&self) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> = connected_components(&self.graph)
            .into_iter()
            .filter(|c| c.len() > 1 || self.graph.degree(c[0]) > 0)
            .collect();
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        comps
    }

    /// The subgraph relabeled onto `0..vertices.len()`.
    pub fn compact(&self) -> Graph {
        induced_subgraph(&self.graph, &self.vertices)
            .expect("vertices are in range")
            .graph
    }
}

/// Peels `g` down to `D_k(G)`: edges with support below `k - 2` are
/// removed in ascending order of current support, and only the edges that
/// shared a triangle with a removed edge are updated.
pub fn k_dense_subgraph(g: &Graph, k: usize) -> Result<DenseSubgraph> {
    check_k(k)?;
    Ok(peel(g.clone(), k))
}

fn peel(mut cur: Graph, k: usize) -> DenseSubgraph {
    let need = k - 2;
    let mut support: HashMap<Edge, usize> = HashMap::new();
    let mut heap = BinaryHeap::new();
    for e in cur.edges() {
        let s = cur.common_neighbor_count(e.u, e.v);
        support.insert(e, s);
        if s < need {
            heap.push(Reverse((s, e)));
        }
    }
    while let Some(Reverse((s, e))) = heap.pop() {
        match support.get(&e) {
            Some(&now) if now == s => {}
            _ => continue,
        }
        support.remove(&e);
        for w in cur.common_neighbors(e.u, e.v) {
            for end in [e.u, e.v] {
                let f = Edge::new(end, w).expect("distinct endpoints");
                if let Some(x) = support.get_mut(&f) {
                    *x -= 1;
                    if *x < need {
                        heap.push(Reverse((*x, f)));
                    }
                }
            }
        }
        cur.set(e.u, e.v, false);
    }
    let vertices: Vec<usize> = (0..cur.order()).filter(|&v| cur.degree(v) > 0).collect();
    let edges: Vec<Edge> = cur.edges().collect();
    DenseSubgraph {
        k,
        vertices,
        edges,
        graph: cur,
    }
}

/// Connected components of `D_k(G)`, largest first, ties by smallest label.
pub fn k_dense_communities(g: &Graph, k: usize) -> Result<Vec<Vec<usize>>> {
    Ok(k_dense_subgraph(g, k)?.communities())
}

/// `D_k(G)` for every `k` from 2 up to the first empty level.
#[derive(Clone, Debug)]
pub struct DenseDecomposition {
    /// `levels[i]` is `D_{i+2}(G)`; the last entry is the first empty level.
    pub levels: Vec<DenseSubgraph>,
}

impl DenseDecomposition {
    /// Largest k with nonempty `D_k(G)`.
    pub fn k_max(&self) -> Option<usize> {
        self.levels.iter().rev().find(|l| !l.is_empty()).map(|l| l.k)
    }

    pub fn level(&self, k: usize) -> Option<&DenseSubgraph> {
        k.checked_sub(2).and_then(|i| self.levels.get(i))
    }
}

pub fn dense_hierarchy(g: &Graph) -> DenseDecomposition {
    let mut levels = Vec::new();
    let mut k = 2;
    let mut prev = g.clone();
    loop {
        // D_{k+1}(G) = D_{k+1}(D_k(G)) since peeling only removes edges.
        let level = peel(prev, k);
        let done = level.is_empty();
        prev = level.graph.clone();
        levels.push(level);
        if done {
            break;
        }
        k += 1;
    }
    DenseDecomposition { levels }
}
