//! Graph algebra: named families, union, join, vertex identification,
//! complement, cartesian product and induced subgraphs.

use super::Graph;
use crate::error::{Error, Result};

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set(u, v, true);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.set(v - 1, v, true);
    }
    g
}

/// `C_n`; for `n < 3` this degenerates to the path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.set(0, n - 1, true);
    }
    g
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.set(0, v, true);
    }
    g
}

/// `C_4 + complement(K_2)`, the 4-regular graph on six vertices.
pub fn octahedron() -> Graph {
    join(&cycle(4), &empty(2))
}

/// `g ∪ h`: the vertices of `h` are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let mut out = Graph::new(shift + h.order());
    for e in g.edges() {
        out.set(e.u, e.v, true);
    }
    for e in h.edges() {
        out.set(e.u + shift, e.v + shift, true);
    }
    out
}

/// `g + h`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    let shift = g.order();
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.set(u, v + shift, true);
        }
    }
    out
}

/// Result of [`identify_vertices`]: the merged graph and, for each input
/// graph, where each of its vertices landed.
#[derive(Clone, Debug)]
pub struct Identified {
    pub graph: Graph,
    pub label_maps: Vec<Vec<usize>>,
    pub merged: usize,
}

/// Glues the chosen vertex of every input graph into a single vertex
/// (label 0 of the output). Other vertices follow in input order.
pub fn identify_vertices(parts: &[(&Graph, usize)]) -> Result<Identified> {
    if parts.is_empty() {
        return Err(Error::InvalidParameters("no graphs to identify".into()));
    }
    for &(g, v) in parts {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.order(),
            });
        }
    }
    let mut label_maps = Vec::with_capacity(parts.len());
    let mut next = 1;
    for &(g, v) in parts {
        let map: Vec<usize> = (0..g.order())
            .map(|u| {
                if u == v {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        label_maps.push(map);
    }
    let mut out = Graph::new(next);
    for (&(g, _), map) in parts.iter().zip(&label_maps) {
        for e in g.edges() {
            out.set(map[e.u], map[e.v], true);
        }
    }
    Ok(Identified {
        graph: out,
        label_maps,
        merged: 0,
    })
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.set(u, v, true);
            }
        }
    }
    out
}

/// `g □ h`; vertex `(a, b)` gets label `a * h.order() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut out = Graph::new(g.order() * nh);
    for a in 0..g.order() {
        for e in h.edges() {
            out.set(a * nh + e.u, a * nh + e.v, true);
        }
    }
    for e in g.edges() {
        for b in 0..nh {
            out.set(e.u * nh + b, e.v * nh + b, true);
        }
    }
    out
}

/// `G[S]` together with `original[i]`, the source label of new vertex `i`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub original: Vec<usize>,
}

/// Induced subgraph on `vertices` (deduplicated, relabeled in ascending
/// order of original label).
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Induced> {
    let mut original = vertices.to_vec();
    original.sort_unstable();
    original.dedup();
    if let Some(&bad) = original.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            n: g.order(),
        });
    }
    let mut out = Graph::new(original.len());
    for (i, &a) in original.iter().enumerate() {
        for (j, &b) in original.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                out.set(i, j, true);
            }
        }
    }
    Ok(Induced { graph: out, original })
}

pub fn delete_vertex(g: &Graph, v: usize) -> Result<Induced> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    let keep: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
    induced_subgraph(g, &keep)
}

pub fn delete_edge(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    let mut out = g.clone();
    out.set(a, b, false);
    Ok(out)
}
