//! Exhaustive sweeps for minimum and maximum edge counts, the full set of
//! realizable edge counts, and the conjectured minimum for larger k.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_connected, Budget, Enumeration, SearchConstraints};
use crate::constructions::{binom, clique_chain_edges, complement_edges, max_edges};
use crate::error::{Error, Result};
use crate::graph::CanonicalForm;

/// Most witnesses stored per record, lowest canonical forms first.
pub const WITNESS_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    Min,
    Max,
    RealizationSet,
}

impl RecordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordKind::Min => "min",
            RecordKind::Max => "max",
            RecordKind::RealizationSet => "realization-set",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    /// Value comes from a verified construction only: a bound, not a certificate.
    ConstructionOnly,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::ConstructionOnly => "construction-only",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Complete,
    /// Budget ran out; values are only what was seen.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub k: usize,
    pub n: usize,
    pub kind: RecordKind,
    /// The minimum or maximum; for realization sets the largest value.
    pub value: Option<usize>,
    /// Every edge count seen to admit a connected k*-dense graph.
    pub values: Vec<usize>,
    pub witnesses: Vec<String>,
    pub method: Method,
    pub status: SearchStatus,
    pub nodes: u64,
    pub seconds: Option<f64>,
}

impl ExtremalRecord {
    pub fn is_complete(&self) -> bool {
        self.status == SearchStatus::Complete
    }
}

fn check_range(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameters(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    Ok(())
}

/// Smallest edge count allowed by the degree floor `δ >= k - 1`.
pub fn degree_floor_edges(k: usize, n: usize) -> usize {
    (n * (k - 1)).div_ceil(2)
}

/// Best known construction for the minimum: the clique chain or, when
/// defined, the complement construction.
pub fn construction_upper_bound(k: usize, n: usize) -> Result<usize> {
    let chain = clique_chain_edges(k, n)?;
    Ok(complement_edges(k, n).map_or(chain, |c| c.min(chain)))
}

struct Sweep {
    by_m: BTreeMap<usize, Vec<CanonicalForm>>,
    nodes: u64,
    complete: bool,
}

fn sweep(
    k: usize,
    n: usize,
    lo: usize,
    hi: usize,
    budget: Budget,
    threads: Option<usize>,
    force: bool,
) -> Result<Sweep> {
    let mut c = SearchConstraints::new(n).with_k(k).edges(lo, hi);
    c.budget = budget;
    c.threads = threads;
    c.force = force;
    let Enumeration {
        graphs,
        nodes,
        complete,
    } = enumerate_connected(&c)?;
    let mut by_m: BTreeMap<usize, Vec<CanonicalForm>> = BTreeMap::new();
    for f in graphs {
        by_m.entry(f.graph().size()).or_default().push(f);
    }
    Ok(Sweep { by_m, nodes, complete })
}

fn status(complete: bool) -> SearchStatus {
    if complete {
        SearchStatus::Complete
    } else {
        SearchStatus::Inconclusive
    }
}

fn capped(forms: &[CanonicalForm]) -> Vec<String> {
    forms.iter().take(WITNESS_CAP).map(CanonicalForm::to_graph6).collect()
}

/// Options shared by the sweeps.
#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    pub budget: Budget,
    pub threads: Option<usize>,
    pub force: bool,
}

/// `e(k, n)`: every edge count from the degree floor up to the best
/// construction is tested; the first feasible one is the minimum.
pub fn search_min_edges(k: usize, n: usize, opts: SweepOptions) -> Result<ExtremalRecord> {
    check_range(k, n)?;
    let start = Instant::now();
    let lo = degree_floor_edges(k, n);
    let hi = construction_upper_bound(k, n)?;
    let s = sweep(k, n, lo, hi, opts.budget, opts.threads, opts.force)?;
    let value = s.by_m.keys().next().copied();
    Ok(ExtremalRecord {
        k,
        n,
        kind: RecordKind::Min,
        value,
        values: s.by_m.keys().copied().collect(),
        witnesses: value.map_or_else(Vec::new, |v| capped(&s.by_m[&v])),
        method: Method::Exhaustive,
        status: status(s.complete),
        nodes: s.nodes,
        seconds: Some(start.elapsed().as_secs_f64()),
    })
}

/// `E(k, n)`: edge counts from `C(n, 2)` down to the closed form are tested
/// in one pass; if none is feasible the rest of the range is swept too.
pub fn search_max_edges(k: usize, n: usize, opts: SweepOptions) -> Result<ExtremalRecord> {
    check_range(k, n)?;
    let start = Instant::now();
    let top = binom(n, 2);
    let floor = degree_floor_edges(k, n);
    let mut lo = max_edges(k, n)?.clamp(floor, top);
    let mut s = sweep(k, n, lo, top, opts.budget, opts.threads, opts.force)?;
    if s.by_m.is_empty() && s.complete && lo > floor {
        let hi = lo - 1;
        lo = floor;
        let rest = sweep(k, n, lo, hi, opts.budget, opts.threads, opts.force)?;
        s = Sweep {
            by_m: rest.by_m,
            nodes: s.nodes + rest.nodes,
            complete: rest.complete,
        };
    }
    let value = s.by_m.keys().next_back().copied();
    Ok(ExtremalRecord {
        k,
        n,
        kind: RecordKind::Max,
        value,
        values: s.by_m.keys().copied().collect(),
        witnesses: value.map_or_else(Vec::new, |v| capped(&s.by_m[&v])),
        method: Method::Exhaustive,
        status: status(s.complete),
        nodes: s.nodes,
        seconds: Some(start.elapsed().as_secs_f64()),
    })
}

/// Every edge count admitting a connected k*-dense graph on `n` vertices,
/// with one witness per count (up to the cap).
pub fn realization_scan(k: usize, n: usize, opts: SweepOptions) -> Result<ExtremalRecord> {
    check_range(k, n)?;
    let start = Instant::now();
    let s = sweep(
        k,
        n,
        degree_floor_edges(k, n),
        binom(n, 2),
        opts.budget,
        opts.threads,
        opts.force,
    )?;
    let witnesses = s.by_m.values().take(WITNESS_CAP).map(|fs| fs[0].to_graph6()).collect();
    Ok(ExtremalRecord {
        k,
        n,
        kind: RecordKind::RealizationSet,
        value: s.by_m.keys().next_back().copied(),
        values: s.by_m.keys().copied().collect(),
        witnesses,
        method: Method::Exhaustive,
        status: status(s.complete),
        nodes: s.nodes,
        seconds: Some(start.elapsed().as_secs_f64()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub k: usize,
    pub n: usize,
    pub conjectured: usize,
    pub exhaustive: Option<usize>,
    pub verdict: Verdict,
    /// A graph at the exhaustive minimum.
    pub witness: Option<String>,
    pub nodes: u64,
}

/// Exhaustive minimum against the clique-chain prediction, for each `n`
/// in the range with `n >= k`.
pub fn conjecture_check(
    k: usize,
    ns: impl IntoIterator<Item = usize>,
    opts: SweepOptions,
) -> Result<Vec<ConjectureRow>> {
    let mut rows = Vec::new();
    for n in ns.into_iter().filter(|&n| n >= k) {
        let conjectured = clique_chain_edges(k, n)?;
        let rec = search_min_edges(k, n, opts)?;
        let verdict = match (rec.status, rec.value) {
            (SearchStatus::Complete, Some(v)) if v == conjectured => Verdict::Match,
            (SearchStatus::Complete, Some(_)) => Verdict::Mismatch,
            _ => Verdict::Inconclusive,
        };
        rows.push(ConjectureRow {
            k,
            n,
            conjectured,
            exhaustive: rec.value.filter(|_| rec.is_complete()),
            verdict,
            witness: rec.witnesses.first().cloned(),
            nodes: rec.nodes,
        });
    }
    Ok(rows)
}
