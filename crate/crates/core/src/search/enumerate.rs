//! Isomorph-free generation by canonical augmentation (vertex addition).
//!
//! A graph on `p + 1` vertices is accepted from its parent on `p` vertices
//! only if the added vertex is, up to automorphism, the canonical deletion
//! vertex: among deletable vertices (non-cut vertices when generating
//! connected graphs) of maximum degree, the one with the highest canonical
//! position. Accepted siblings are deduplicated by canonical form. Each
//! isomorphism class is then produced exactly once, from a unique parent.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::binom;
use crate::density::density_index;
use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, cut_vertices, CanonicalForm, Graph};

/// Default largest `n` for a k-filtered search.
pub const GUARD_FILTERED: usize = 9;
/// Default largest `n` for an unfiltered enumeration.
pub const GUARD_UNFILTERED: usize = 8;
/// Largest `n` accepted even with `force`.
pub const HARD_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            max_seconds: None,
        }
    }

    pub fn seconds(s: f64) -> Self {
        Budget {
            max_nodes: None,
            max_seconds: Some(s),
        }
    }

    pub fn is_limited(&self) -> bool {
        self.max_nodes.is_some() || self.max_seconds.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConstraints {
    pub n: usize,
    pub m_lo: usize,
    pub m_hi: usize,
    pub min_degree: usize,
    pub connected_only: bool,
    /// Keep only graphs with exactly this k*.
    pub k: Option<usize>,
    pub budget: Budget,
    /// Worker count; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Lift the default size guards (up to [`HARD_LIMIT`]); needs a budget.
    pub force: bool,
}

impl SearchConstraints {
    /// All connected graphs on `n` vertices.
    pub fn new(n: usize) -> Self {
        SearchConstraints {
            n,
            m_lo: 0,
            m_hi: binom(n, 2),
            min_degree: 0,
            connected_only: true,
            k: None,
            budget: Budget::unlimited(),
            threads: None,
            force: false,
        }
    }

    /// Filters to k*-dense graphs; the degree floor becomes `k - 1`.
    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self.min_degree = self.min_degree.max(k.saturating_sub(1));
        self
    }

    pub fn edges(mut self, lo: usize, hi: usize) -> Self {
        self.m_lo = lo;
        self.m_hi = hi;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameters("n must be at least 1".into()));
        }
        if self.m_lo > self.m_hi || self.m_hi > binom(self.n, 2) {
            return Err(Error::InvalidParameters(format!(
                "need m_lo <= m_hi <= C(n,2), got [{}, {}] for n={}",
                self.m_lo, self.m_hi, self.n
            )));
        }
        if let Some(k) = self.k {
            if k < 2 {
                return Err(Error::InvalidK(k));
            }
        }
        let guard = if self.k.is_some() {
            GUARD_FILTERED
        } else {
            GUARD_UNFILTERED
        };
        if self.n > HARD_LIMIT {
            return Err(Error::TooLarge {
                n: self.n,
                limit: HARD_LIMIT,
            });
        }
        if self.n > guard && !self.force {
            return Err(Error::TooLarge {
                n: self.n,
                limit: guard,
            });
        }
        if self.n > guard && !self.budget.is_limited() {
            return Err(Error::InvalidParameters(format!(
                "n={} is beyond the default guard of {guard}; forcing requires a budget",
                self.n
            )));
        }
        Ok(())
    }
}

/// Canonical representatives in ascending canonical order.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub graphs: Vec<CanonicalForm>,
    /// Generation-tree nodes visited (accepted graphs at every level).
    pub nodes: u64,
    /// `false` when the budget ran out; `graphs` is then a subset.
    pub complete: bool,
}

/// Connected (or, with `connected_only = false`, all) graphs meeting the
/// constraints, one per isomorphism class.
pub fn enumerate_connected(c: &SearchConstraints) -> Result<Enumeration> {
    let k = c.k;
    enumerate_filtered(c, &move |g: &Graph| k.is_none_or(|k| density_index(g).get() == Some(k)))
}

/// As [`enumerate_connected`], with an extra predicate applied to complete
/// graphs only.
pub fn enumerate_filtered(c: &SearchConstraints, keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Result<Enumeration> {
    c.validate()?;
    match c.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::InvalidParameters(e.to_string()))?;
            Ok(pool.install(|| generate(c, keep)))
        }
        None => Ok(generate(c, keep)),
    }
}

struct Progress {
    nodes: AtomicU64,
    stop: AtomicBool,
    start: Instant,
    budget: Budget,
}

impl Progress {
    fn charge(&self, n: u64) {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        let over_nodes = self.budget.max_nodes.is_some_and(|cap| total > cap);
        let over_time = self
            .budget
            .max_seconds
            .is_some_and(|s| self.start.elapsed().as_secs_f64() > s);
        if over_nodes || over_time {
            self.stop.store(true, Ordering::Relaxed);
        }
    }

    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

fn generate(c: &SearchConstraints, keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Enumeration {
    let progress = Progress {
        nodes: AtomicU64::new(1),
        stop: AtomicBool::new(false),
        start: Instant::now(),
        budget: c.budget,
    };
    let mut level = vec![Graph::new(1)];
    let mut finals: Vec<CanonicalForm> = Vec::new();
    if c.n == 1 && admits(c, &level[0]) && keep(&level[0]) {
        finals.push(crate::graph::canonical_form(&level[0]));
    }
    for p in 1..c.n {
        let last = p + 1 == c.n;
        let mut next: Vec<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|parent| {
                if progress.stopped() {
                    return Vec::new();
                }
                let kids = children(parent, c);
                progress.charge(kids.len() as u64);
                kids
            })
            .collect();
        next.sort_unstable();
        if last {
            finals = next
                .into_par_iter()
                .filter(|f| {
                    let g = f.graph();
                    admits(c, &g) && keep(&g)
                })
                .collect();
        } else {
            level = next.iter().map(CanonicalForm::graph).collect();
        }
        if progress.stopped() {
            break;
        }
    }
    Enumeration {
        graphs: finals,
        nodes: progress.nodes.load(Ordering::Relaxed),
        complete: !progress.stopped(),
    }
}

fn admits(c: &SearchConstraints, g: &Graph) -> bool {
    (c.m_lo..=c.m_hi).contains(&g.size())
        && g.min_degree().unwrap_or(0) >= c.min_degree
        && (!c.connected_only || crate::graph::is_connected(g))
}

/// Accepted children of `parent`, one per isomorphism class.
fn children(parent: &Graph, c: &SearchConstraints) -> Vec<CanonicalForm> {
    let p = parent.order();
    let remaining = c.n - (p + 1);
    // Later vertices p+1..n-1 can contribute at most p+1, ..., n-1 edges.
    let future: usize = (p + 1..c.n).sum();
    let base_deg = parent.degrees();
    let base_m = parent.size();
    let first = if c.connected_only { 1u64 } else { 0 };
    let mut out = Vec::new();
    for s in first..(1u64 << p) {
        let d_new = s.count_ones() as usize;
        let m = base_m + d_new;
        if m > c.m_hi || m + future < c.m_lo {
            continue;
        }
        let floor_ok = d_new + remaining >= c.min_degree
            && (0..p).all(|v| base_deg[v] + (s >> v & 1) as usize + remaining >= c.min_degree);
        if !floor_ok {
            continue;
        }
        let mut child = Graph::new(p + 1);
        for e in parent.edges() {
            child.set(e.u, e.v, true);
        }
        for v in (0..p).filter(|v| s >> v & 1 == 1) {
            child.set(v, p, true);
        }
        if let Some(form) = accept(&child, c.connected_only) {
            out.push(form);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Canonical form of `child` if its last vertex is a canonical deletion.
fn accept(child: &Graph, connected_only: bool) -> Option<CanonicalForm> {
    let n = child.order();
    let new = n - 1;
    let deg = child.degrees();
    let mut deletable = vec![true; n];
    if connected_only {
        for v in cut_vertices(child) {
            deletable[v] = false;
        }
    }
    let top = (0..n).filter(|&v| deletable[v]).map(|v| deg[v]).max()?;
    if !deletable[new] || deg[new] < top {
        return None;
    }
    let tied: Vec<usize> = (0..n).filter(|&v| deletable[v] && deg[v] == top).collect();
    let lab = canonical_labeling(child, None);
    if tied.len() > 1 {
        let pos = lab.positions();
        let w = *tied.iter().max_by_key(|&&v| pos[v]).expect("tied is nonempty");
        if lab.orbits[w] != lab.orbits[new] {
            return None;
        }
    }
    Some(lab.form)
}
