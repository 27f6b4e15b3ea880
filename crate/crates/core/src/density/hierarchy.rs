//! The clique / k-dense / k-core hierarchy.
//!
//! k-core here is the maximal induced subgraph with minimum degree at least
//! `k - 1`, so the k-core of `K_k` is `K_k` itself. This is one lower than
//! the common "minimum degree k" convention.

use serde::{Deserialize, Serialize};

use super::{density_index, DensityIndex};
use crate::graph::Graph;

/// Vertices of the k-core, ascending. Empty when no vertex survives.
pub fn k_core(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.order();
    let need = k.saturating_sub(1);
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < need).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] < need {
                    alive[u] = false;
                    stack.push(u);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Largest k with a nonempty k-core (degeneracy + 1); 0 for the null graph.
pub fn core_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    // Smallest-last ordering: degeneracy is the largest degree seen at removal.
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .expect("vertex left");
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    degeneracy + 1
}

type Row = Vec<u64>;

fn row_of(g: &Graph, v: usize) -> Row {
    g.row(v).to_vec()
}

fn and(a: &[u64], b: &[u64]) -> Row {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn ones(a: &[u64]) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + b)
        })
    })
}

fn first(a: &[u64]) -> Option<usize> {
    a.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + a[i].trailing_zeros() as usize)
}

fn count(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

fn clear(a: &mut [u64], v: usize) {
    a[v / 64] &= !(1 << (v % 64));
}

/// Exact clique number by branch and bound with greedy-colouring bounds.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let rows: Vec<Row> = (0..n).map(|v| row_of(g, v)).collect();
    let mut all = vec![0u64; g.row(0).len()];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut best = 1;
    expand(&rows, 0, all, &mut best);
    best
}

fn expand(rows: &[Row], size: usize, cand: Row, best: &mut usize) {
    let (order, colors) = colour_sort(rows, &cand);
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next = and(&cand, &rows[v]);
        if count(&next) == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(rows, size + 1, next, best);
        }
        clear(&mut cand, v);
    }
}

/// Greedy sequential colouring; returns vertices in colour order with the
/// colour count reached at each position.
fn colour_sort(rows: &[Row], cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut left = cand.to_vec();
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut colour = 0;
    while count(&left) > 0 {
        colour += 1;
        let mut avail = left.clone();
        while let Some(v) = first(&avail) {
            clear(&mut avail, v);
            clear(&mut left, v);
            for (a, r) in avail.iter_mut().zip(&rows[v]) {
                *a &= !r;
            }
            order.push(v);
            colors.push(colour);
        }
    }
    (order, colors)
}

/// All maximal cliques, each ascending, in lexicographic order
/// (Bron-Kerbosch with pivoting).
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let rows: Vec<Row> = (0..n).map(|v| row_of(g, v)).collect();
    let mut p = vec![0u64; g.row(0).len()];
    for v in 0..n {
        p[v / 64] |= 1 << (v % 64);
    }
    let x = vec![0u64; p.len()];
    bron_kerbosch(&rows, &mut Vec::new(), p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(rows: &[Row], r: &mut Vec<usize>, mut p: Row, mut x: Row, out: &mut Vec<Vec<usize>>) {
    if count(&p) == 0 {
        if count(&x) == 0 {
            out.push(r.clone());
        }
        return;
    }
    let pivot = ones(&p)
        .chain(ones(&x))
        .max_by_key(|&u| count(&and(&p, &rows[u])))
        .expect("p is nonempty");
    let branch: Vec<usize> = ones(&p).filter(|&v| rows[pivot][v / 64] >> (v % 64) & 1 == 0).collect();
    for v in branch {
        r.push(v);
        bron_kerbosch(rows, r, and(&p, &rows[v]), and(&x, &rows[v]), out);
        r.pop();
        clear(&mut p, v);
        x[v / 64] |= 1 << (v % 64);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyReport {
    pub omega: usize,
    pub k_star: DensityIndex,
    pub core: usize,
}

pub fn hierarchy_report(g: &Graph) -> HierarchyReport {
    HierarchyReport {
        omega: clique_number(g),
        k_star: density_index(g),
        core: core_number(g),
    }
}
