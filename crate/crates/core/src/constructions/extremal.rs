//! Builders for the minimum-edge, maximum-edge and intermediate-edge
//! k*-dense graphs.

use super::formulas::{
    binom, clique_chain_edges, complement_edges, disconnected_min_edges, max_edges, min_edge_formula,
};
use super::{Certificate, ConstructionRecipe, ExtremalWitness};
use crate::density::density_index;
use crate::error::{Error, Result};
use crate::graph::{
    complement, complete, delete_edge, disjoint_union, empty, identify_vertices, is_connected, join, path, Edge, Graph,
    VertexPartition,
};

fn invalid(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

fn check_range(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(invalid(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    Ok(())
}

fn glued_graph(k: usize, r: usize) -> Graph {
    join(&complete(k - r), &disjoint_union(&complete(r), &complete(r)))
}

/// Two copies of `K_k` sharing `k - r` vertices, i.e. `K_{k-r} + 2K_r`.
/// The shared vertices come first. `r = 0` gives `K_k`.
pub fn glued_cliques(k: usize, r: usize) -> Result<ExtremalWitness> {
    if k < 2 || r >= k {
        return Err(invalid(format!("need k >= 2 and 0 <= r < k, got k={k}, r={r}")));
    }
    let m = binom(k, 2) + binom(r, 2) + r * (k - r);
    ExtremalWitness::certify(
        ConstructionRecipe::new("glued-cliques", &[("k", k), ("r", r)]),
        Certificate::new(k + r, m, k, Some(true)),
        glued_graph(k, r),
    )
}

/// `n = kq + r`: `q` copies of `K_k` when `r = 0`, otherwise `q - 1`
/// copies plus one glued-cliques component.
pub fn disconnected_min_family(k: usize, n: usize) -> Result<ExtremalWitness> {
    check_range(k, n)?;
    let (q, r) = (n / k, n % k);
    let copies = if r == 0 { q } else { q - 1 };
    let mut g = Graph::new(0);
    for _ in 0..copies {
        g = disjoint_union(&g, &complete(k));
    }
    if r > 0 {
        g = disjoint_union(&g, &glued_graph(k, r));
    }
    ExtremalWitness::certify(
        ConstructionRecipe::new("disconnected-min", &[("k", k), ("n", n)]),
        Certificate::new(n, disconnected_min_edges(k, n)?, k, Some(q == 1)),
        g,
    )
}

/// Blocks glued at hub vertex 0.
fn at_hub(blocks: &[Graph]) -> Graph {
    let parts: Vec<(&Graph, usize)> = blocks.iter().map(|b| (b, 0)).collect();
    identify_vertices(&parts).expect("nonempty blocks").graph
}

/// `n - 1 = (k-1)q + r`: `q` blocks at a hub, one of them glued cliques
/// with parameter `r` when `r > 0`, the rest `K_k`.
pub fn clique_chain(k: usize, n: usize) -> Result<ExtremalWitness> {
    check_range(k, n)?;
    let (q, r) = ((n - 1) / (k - 1), (n - 1) % (k - 1));
    let mut blocks = vec![complete(k); q];
    if r > 0 {
        blocks[0] = glued_graph(k, r);
    }
    ExtremalWitness::certify(
        ConstructionRecipe::new("clique-chain", &[("k", k), ("n", n)]),
        Certificate::new(n, clique_chain_edges(k, n)?, k, Some(true)),
        at_hub(&blocks),
    )
}

/// First edge avoiding the hub (vertex 0) whose multiplicity is `k - 2`.
fn hub_free_witness(g: &Graph, k: usize) -> Option<Edge> {
    g.edges()
        .find(|e| e.u != 0 && g.common_neighbor_count(e.u, e.v) + 2 == k)
}

/// Connected k*-dense graph on `n` vertices with the fewest edges, for
/// `k` in 2..=4. Vertex 0 is the hub.
pub fn min_edge_construction(k: usize, n: usize) -> Result<ExtremalWitness> {
    check_range(k, n)?;
    let g = match k {
        2 => path(n),
        3 => {
            let mut blocks = vec![complete(3); (n - 1) / 2];
            if n.is_multiple_of(2) {
                // K_4 - e glued through a degree-3 vertex keeps the hub adjacent to all.
                blocks.truncate((n - 4) / 2);
                blocks.insert(0, delete_edge(&complete(4), 2, 3)?);
            }
            at_hub(&blocks)
        }
        4 => {
            let first = match n % 3 {
                1 => complete(4),
                2 => delete_edge(&complete(5), 3, 4)?,
                _ => join(&complete(2), &disjoint_union(&complete(2), &complete(2))),
            };
            let rest = (n - first.order()) / 3;
            let mut blocks = vec![first];
            blocks.extend(vec![complete(4); rest]);
            at_hub(&blocks)
        }
        _ => {
            return Err(invalid(format!(
                "minimum-edge construction known only for k <= 4, got k={k}"
            )))
        }
    };
    let mut w = ExtremalWitness::certify(
        ConstructionRecipe::new("min-edge", &[("k", k), ("n", n)]),
        Certificate::new(n, min_edge_formula(k, n)?.value, k, Some(true)),
        g,
    )?;
    w.witness_edge = if k == 2 {
        Some(Edge::new(0, 1)?)
    } else {
        hub_free_witness(&w.graph, k)
    };
    Ok(w)
}

/// Complement of `K_{n-k}` plus `floor(k/2)` disjoint edges (plus one
/// isolated vertex when `k` is odd).
pub fn complement_construction(k: usize, n: usize) -> Result<ExtremalWitness> {
    let m = complement_edges(k, n)?;
    let mut h = complete(n - k);
    for _ in 0..k / 2 {
        h = disjoint_union(&h, &complete(2));
    }
    if k % 2 == 1 {
        h = disjoint_union(&h, &empty(1));
    }
    ExtremalWitness::certify(
        ConstructionRecipe::new("complement", &[("k", k), ("n", n)]),
        Certificate::new(n, m, k, Some(true)),
        complement(&h),
    )
}

/// Connected k*-dense graph on `n` vertices with the most edges.
///
/// For `n >= k + 2`: vertices `u = 0`, `v = 1` and a clique on `A ∪ B ∪ C`
/// with `|A| = floor((n-k)/2)`, `|B| = k - 2`, `|C| = ceil((n-k)/2)`;
/// `u` sees `A ∪ B ∪ {v}` and `v` sees `B ∪ C ∪ {u}`. The partition is
/// reported as blocks `[u], [v], A, B, C`.
pub fn max_edge_construction(k: usize, n: usize) -> Result<ExtremalWitness> {
    check_range(k, n)?;
    let recipe = ConstructionRecipe::new("max-edge", &[("k", k), ("n", n)]);
    let cert = Certificate::new(n, max_edges(k, n)?, k, Some(true));
    if n == k {
        return ExtremalWitness::certify(recipe, cert, complete(k));
    }
    if n == k + 1 {
        return ExtremalWitness::certify(recipe, cert, delete_edge(&complete(n), 0, 1)?);
    }
    let a = (n - k) / 2;
    let blocks = vec![
        vec![0],
        vec![1],
        (2..2 + a).collect::<Vec<_>>(),
        (2 + a..k + a).collect(),
        (k + a..n).collect(),
    ];
    let mut g = Graph::new(n);
    for x in 2..n {
        for y in x + 1..n {
            g.add_edge(x, y)?;
        }
    }
    g.add_edge(0, 1)?;
    for &x in blocks[2].iter().chain(&blocks[3]) {
        g.add_edge(0, x)?;
    }
    for &x in blocks[3].iter().chain(&blocks[4]) {
        g.add_edge(1, x)?;
    }
    let mut w = ExtremalWitness::certify(recipe, cert, g)?;
    w.partition = Some(VertexPartition::new(blocks)?);
    w.witness_edge = Some(Edge::new(0, 1)?);
    Ok(w)
}

/// Connected k*-dense graph on `n` vertices with exactly `a` edges, for
/// `k` in 2..=4 and `a` between the minimum and maximum edge counts.
///
/// Deterministic routes, tried in order:
///
/// - upward from the minimum-edge construction, adding non-edges in
///   lexicographic sweeps. A pair is admissible when it already has `k - 2`
///   common neighbours and adding it leaves the witness edge's common
///   neighbourhood unchanged (for `k = 2`: it avoids the path end, vertex 0);
/// - downward from the maximum-edge construction, deleting edges in
///   lexicographic sweeps whenever the graph stays connected with the same k*;
/// - failing both, a smaller realization glued at one vertex to `K_j` or
///   `K_j - e` with `j` large enough to keep k*.
///
/// Every intermediate graph of the sweeps is k*-dense. Counts no route
/// reaches fail with [`Error::Unrealized`]; some of them admit no such
/// graph at all.
pub fn realization(k: usize, n: usize, a: usize) -> Result<ExtremalWitness> {
    check_range(k, n)?;
    if k > 4 {
        return Err(invalid(format!("realization known only for k <= 4, got k={k}")));
    }
    let (lo, hi) = (min_edge_formula(k, n)?.value, max_edges(k, n)?);
    if a < lo || a > hi {
        return Err(invalid(format!("edge count {a} outside [{lo}, {hi}] for k={k}, n={n}")));
    }
    let g = realize(k, n, a)?.ok_or(Error::Unrealized { k, n, a })?;
    let witness = g
        .edges()
        .find(|e| g.common_neighbor_count(e.u, e.v) + 2 == k)
        .expect("k*-dense graph has an edge of minimum multiplicity");
    let mut w = ExtremalWitness::certify(
        ConstructionRecipe::new("realization", &[("k", k), ("n", n), ("a", a)]),
        Certificate::new(n, a, k, Some(true)),
        g,
    )?;
    w.witness_edge = Some(witness);
    Ok(w)
}

fn realize(k: usize, n: usize, a: usize) -> Result<Option<Graph>> {
    let (lo, hi) = (min_edge_formula(k, n)?.value, max_edges(k, n)?);
    if a < lo || a > hi {
        return Ok(None);
    }
    let base = min_edge_construction(k, n)?;
    let witness = base.witness_edge.expect("min-edge construction records a witness");
    let up = ascend(base.graph, witness, k, a)?;
    if up.size() == a {
        return Ok(Some(up));
    }
    let down = descend(max_edge_construction(k, n)?.graph, k, a);
    if down.size() == a {
        return Ok(Some(down));
    }
    // A smaller realization glued at one vertex to K_j, or to K_j - e when that keeps k* >= k.
    for j in k..=n + 1 - k {
        let mut blocks = vec![complete(j)];
        if j > k {
            blocks.push(delete_edge(&complete(j), 0, 1)?);
        }
        for block in blocks.iter().filter(|b| b.size() <= a) {
            if let Some(rest) = realize(k, n + 1 - j, a - block.size())? {
                return Ok(Some(identify_vertices(&[(&rest, 0), (block, j - 1)])?.graph));
            }
        }
    }
    Ok(None)
}

fn ascend(mut g: Graph, witness: Edge, k: usize, a: usize) -> Result<Graph> {
    let n = g.order();
    let (u1, u2) = (witness.u, witness.v);
    let other = |p: usize| {
        if p == u1 {
            Some(u2)
        } else if p == u2 {
            Some(u1)
        } else {
            None
        }
    };
    // An addition can give a later pair enough support, so sweep to a fixed point.
    let mut grew = true;
    while grew && g.size() < a {
        grew = false;
        'sweep: for x in 0..n {
            for y in x + 1..n {
                if g.size() == a {
                    break 'sweep;
                }
                if g.has_edge(x, y) || g.common_neighbor_count(x, y) + 2 < k {
                    continue;
                }
                let admissible = if k == 2 {
                    x != u1 && y != u1
                } else {
                    match (other(x), other(y)) {
                        (Some(o), _) => !g.has_edge(o, y),
                        (_, Some(o)) => !g.has_edge(o, x),
                        _ => true,
                    }
                };
                if !admissible {
                    continue;
                }
                g.add_edge(x, y)?;
                grew = true;
                let ks = density_index(&g);
                if ks.get() != Some(k) {
                    return Err(Error::Certificate {
                        recipe: "realization".into(),
                        detail: format!("adding {x}-{y} changed k* to {ks}"),
                    });
                }
            }
        }
    }
    Ok(g)
}

fn descend(mut g: Graph, k: usize, a: usize) -> Graph {
    let mut shrank = true;
    while shrank && g.size() > a {
        shrank = false;
        for e in g.edge_list() {
            if g.size() == a {
                break;
            }
            g.set(e.0, e.1, false);
            if density_index(&g).get() == Some(k) && is_connected(&g) {
                shrank = true;
            } else {
                g.set(e.0, e.1, true);
            }
        }
    }
    g
}
