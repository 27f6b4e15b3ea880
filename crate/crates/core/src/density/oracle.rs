//! Exhaustive k-dense community oracle over vertex subsets.
//!
//! A subset `S` qualifies when `|S| >= 2`, `G[S]` is connected, and every
//! edge of `G[S]` has at least `k - 2` common neighbours inside `S`.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceDense {
    /// Qualifying subsets with no qualifying proper superset.
    pub maximal: Vec<Vec<usize>>,
    /// Qualifying subsets contained in a larger qualifying subset.
    pub sub_communities: Vec<Vec<usize>>,
    /// Vertices and induced edges of the union of the maximal subsets.
    pub union_vertices: Vec<usize>,
    pub union_edges: Vec<Edge>,
}

pub fn brute_force_k_dense(g: &Graph, k: usize) -> Result<BruteForceDense> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let full = 1usize << n;
    let need = (k - 2) as u32;
    let valid: Vec<bool> = (0..full).map(|s| qualifies(&rows, s as u32, need)).collect();

    // covered[s]: some strict superset of s qualifies. Supersets are
    // numerically larger, so a descending sweep sees them first.
    let mut covered = vec![false; full];
    for s in (0..full).rev() {
        covered[s] = (0..n)
            .filter(|&v| s & (1 << v) == 0)
            .any(|v| valid[s | 1 << v] || covered[s | 1 << v]);
    }

    let members = |s: usize| (0..n).filter(|&v| s & (1 << v) != 0).collect::<Vec<_>>();
    let mut maximal = Vec::new();
    let mut sub_communities = Vec::new();
    let mut union_mask = 0usize;
    let mut union_edges = Vec::new();
    for s in 0..full {
        if !valid[s] {
            continue;
        }
        if covered[s] {
            sub_communities.push(members(s));
        } else {
            maximal.push(members(s));
            union_mask |= s;
            for e in g.edges() {
                if s & (1 << e.u) != 0 && s & (1 << e.v) != 0 {
                    union_edges.push(e);
                }
            }
        }
    }
    union_edges.sort_unstable();
    union_edges.dedup();
    let by_size = |a: &Vec<usize>, b: &Vec<usize>| b.len().cmp(&a.len()).then(a.cmp(b));
    maximal.sort_by(by_size);
    sub_communities.sort_by(by_size);
    Ok(BruteForceDense {
        maximal,
        sub_communities,
        union_vertices: members(union_mask),
        union_edges,
    })
}

fn qualifies(rows: &[u32], s: u32, need: u32) -> bool {
    if s.count_ones() < 2 {
        return false;
    }
    let start = s.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros();
        frontier &= frontier - 1;
        let fresh = rows[v as usize] & s & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    if seen != s {
        return false;
    }
    let mut rest = s;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nu = rows[u] & s;
        let mut higher = nu & rest;
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            if (nu & rows[v]).count_ones() < need {
                return false;
            }
        }
    }
    true
}
