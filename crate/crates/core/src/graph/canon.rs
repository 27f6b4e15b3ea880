//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first non-singleton cell, and branch on each of
//! its vertices. Every node carries a refinement trace; the canonical leaf
//! is the one maximizing `(trace sequence, permuted adjacency)`. Pruning:
//!
//! * a node whose trace prefix is below the best leaf's and differs from the
//!   first leaf's is abandoned;
//! * a leaf whose certificate equals the first leaf's yields an automorphism,
//!   and the search returns to the deepest ancestor on the first path;
//! * children in the same orbit of the automorphisms found so far that fix
//!   the current node's individualized vertices are explored only once.
//!
//! With this pruning the automorphisms found generate the full group, so
//! [`Labeling::orbits`] are exact orbits.
//!
//! Intended for graphs of up to a few dozen vertices; highly regular graphs
//! much larger than that may take a long time.

use std::cmp::Ordering;
use std::fmt;

use super::{words_for, Graph};

/// Canonically relabeled adjacency. Equal forms ⟺ isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The canonical representative of the isomorphism class.
    pub fn graph(&self) -> Graph {
        Graph {
            n: self.n,
            words: words_for(self.n),
            bits: self.rows.clone(),
        }
    }

    pub fn to_graph6(&self) -> String {
        super::to_graph6(&self.graph())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    pub form: CanonicalForm,
    /// Automorphism group generators, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Labeling {
    /// Canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g, None).form
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && {
            let (mut dg, mut dh) = (g.degrees(), h.degrees());
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical_form(g) == canonical_form(h)
}

/// Canonical labeling of `g`. With `colors`, only color-preserving
/// relabelings are considered and lower colors come first.
pub fn canonical_labeling(g: &Graph, colors: Option<&[usize]>) -> Labeling {
    let n = g.order();
    if let Some(c) = colors {
        assert_eq!(c.len(), n, "one color per vertex");
    }
    let mut part = Partition::new(n, colors);
    let mut queue: Vec<usize> = part.cell_starts();
    let root_trace = part.refine(g, &mut queue);
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut seq = Vec::new();
    let mut traces = vec![root_trace];
    search.explore(&part, &mut seq, &mut traces);
    let best = search.best.expect("search visits at least one leaf");
    let orbits = orbits_of(n, &search.generators, &[]);
    Labeling {
        order: best.perm,
        form: CanonicalForm { n, rows: best.cert },
        generators: search.generators,
        orbits,
    }
}

/// Orbit representatives of the group generated by the generators that fix
/// every vertex in `fixed`.
fn orbits_of(n: usize, generators: &[Vec<usize>], fixed: &[usize]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gamma in generators {
        if fixed.iter().any(|&v| gamma[v] != v) {
            continue;
        }
        for (v, &w) in gamma.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

#[derive(Clone)]
struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    /// For each position, the start of its cell.
    start: Vec<usize>,
    /// Indexed by cell start: one past the cell's last position.
    end: Vec<usize>,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(5) ^ x).wrapping_mul(0x517c_c1b7_2722_0a95)
}

impl Partition {
    fn new(n: usize, colors: Option<&[usize]>) -> Self {
        let mut elems: Vec<usize> = (0..n).collect();
        if let Some(c) = colors {
            elems.sort_by_key(|&v| (c[v], v));
        }
        let mut p = Partition {
            elems,
            pos: vec![0; n],
            start: vec![0; n],
            end: vec![n; n],
        };
        for (i, &v) in p.elems.iter().enumerate() {
            p.pos[v] = i;
        }
        if let Some(c) = colors {
            let mut s = 0;
            for i in 0..n {
                if i > 0 && c[p.elems[i]] != c[p.elems[i - 1]] {
                    p.end[s] = i;
                    s = i;
                }
                p.start[i] = s;
            }
            if n > 0 {
                p.end[s] = n;
            }
        }
        p
    }

    fn cell_starts(&self) -> Vec<usize> {
        let n = self.elems.len();
        let mut out = Vec::new();
        let mut s = 0;
        while s < n {
            out.push(s);
            s = self.end[s];
        }
        out
    }

    fn is_discrete(&self) -> bool {
        let n = self.elems.len();
        let mut s = 0;
        while s < n {
            if self.end[s] - s > 1 {
                return false;
            }
            s = self.end[s];
        }
        true
    }

    fn first_nonsingleton(&self) -> Option<usize> {
        let n = self.elems.len();
        let mut s = 0;
        while s < n {
            if self.end[s] - s > 1 {
                return Some(s);
            }
            s = self.end[s];
        }
        None
    }

    /// Splits `v` off the front of its cell. Returns the new singleton's start.
    fn individualize(&mut self, v: usize) -> usize {
        let p = self.pos[v];
        let s = self.start[p];
        let e = self.end[s];
        let u = self.elems[s];
        self.elems.swap(s, p);
        self.pos[u] = p;
        self.pos[v] = s;
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for i in s + 1..e {
            self.start[i] = s + 1;
        }
        s
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, processing `queue` (cell starts) first-in first-out. Returns a
    /// label-invariant trace of the splits performed.
    fn refine(&mut self, g: &Graph, queue: &mut Vec<usize>) -> u64 {
        let n = self.elems.len();
        let words = g.words();
        let mut queued = vec![false; n];
        for &s in queue.iter() {
            queued[s] = true;
        }
        let mut head = 0;
        let mut trace = 0x9e37_79b9_7f4a_7c15u64;
        let mut mask = vec![0u64; words];
        let mut counts = vec![0usize; n];
        let mut keyed: Vec<(usize, usize)> = Vec::with_capacity(n);
        while head < queue.len() {
            let sp = queue[head];
            head += 1;
            queued[sp] = false;
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &self.elems[sp..self.end[sp]] {
                mask[v / 64] |= 1 << (v % 64);
            }
            trace = mix(trace, sp as u64);
            let mut c = 0;
            while c < n {
                let e = self.end[c];
                if e - c == 1 {
                    let v = self.elems[c];
                    let k = count_in(g.row(v), &mask);
                    trace = mix(trace, k as u64);
                    c = e;
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for &v in &self.elems[c..e] {
                    let k = count_in(g.row(v), &mask);
                    counts[v] = k;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    trace = mix(trace, (c as u64) << 32 | lo as u64);
                    c = e;
                    continue;
                }
                keyed.clear();
                keyed.extend(self.elems[c..e].iter().map(|&v| (counts[v], v)));
                keyed.sort_unstable();
                let mut frag = c;
                for i in c..e {
                    let (k, v) = keyed[i - c];
                    self.elems[i] = v;
                    self.pos[v] = i;
                    if i > c && keyed[i - c - 1].0 != k {
                        self.end[frag] = i;
                        trace = mix(trace, (frag as u64) << 32 | (i - frag) as u64);
                        trace = mix(trace, keyed[i - c - 1].0 as u64);
                        if !queued[frag] {
                            queued[frag] = true;
                            queue.push(frag);
                        }
                        frag = i;
                    }
                    self.start[i] = frag;
                }
                self.end[frag] = e;
                trace = mix(trace, (frag as u64) << 32 | (e - frag) as u64);
                trace = mix(trace, hi as u64);
                if !queued[frag] {
                    queued[frag] = true;
                    queue.push(frag);
                }
                c = e;
            }
        }
        queue.clear();
        mix(trace, self.cell_starts().len() as u64)
    }
}

#[inline]
fn count_in(row: &[u64], mask: &[u64]) -> usize {
    row.iter().zip(mask).map(|(a, b)| (a & b).count_ones() as usize).sum()
}

struct Leaf {
    perm: Vec<usize>,
    cert: Vec<u64>,
    traces: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

/// Lexicographic comparison where a proper prefix sorts first.
fn cmp_traces(a: &[u64], b: &[u64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Compares a partial trace sequence with a prefix of a complete one.
fn cmp_prefix(partial: &[u64], full: &[u64]) -> Ordering {
    for (i, x) in partial.iter().enumerate() {
        match full.get(i) {
            None => return Ordering::Greater,
            Some(y) => match x.cmp(y) {
                Ordering::Equal => {}
                o => return o,
            },
        }
    }
    Ordering::Equal
}

impl Search<'_> {
    fn certificate(&self, perm: &[usize]) -> Vec<u64> {
        let n = perm.len();
        let words = words_for(n);
        let mut inv = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            inv[v] = i;
        }
        let mut cert = vec![0u64; n * words];
        for (i, &v) in perm.iter().enumerate() {
            for u in self.g.neighbors(v) {
                let j = inv[u];
                cert[i * words + j / 64] |= 1 << (j % 64);
            }
        }
        cert
    }

    /// Returns `Some(level)` to unwind to the first-path node at `level`.
    fn explore(&mut self, part: &Partition, seq: &mut Vec<usize>, traces: &mut Vec<u64>) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(part, seq, traces);
        }
        let depth = seq.len();
        let cell = part.first_nonsingleton().expect("not discrete");
        let mut children: Vec<usize> = part.elems[cell..part.end[cell]].to_vec();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbit_gens = usize::MAX;
        let mut orbits: Vec<usize> = Vec::new();
        for &w in &children {
            if !explored.is_empty() && !self.generators.is_empty() {
                if orbit_gens != self.generators.len() {
                    orbits = orbits_of(part.elems.len(), &self.generators, seq);
                    orbit_gens = self.generators.len();
                }
                if explored.iter().any(|&x| orbits[x] == orbits[w]) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = part.clone();
            let s = child.individualize(w);
            let t = child.refine(self.g, &mut vec![s]);
            traces.push(t);
            seq.push(w);
            let on_first = match &self.first {
                None => true,
                Some(f) => cmp_prefix(traces, &f.traces) == Ordering::Equal,
            };
            let vs_best = match &self.best {
                None => Ordering::Equal,
                Some(b) => cmp_prefix(traces, &b.traces),
            };
            let jump = if on_first || vs_best != Ordering::Less {
                self.explore(&child, seq, traces)
            } else {
                None
            };
            seq.pop();
            traces.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, seq: &[usize], traces: &[u64]) -> Option<usize> {
        let perm = part.elems.clone();
        let cert = self.certificate(&perm);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                perm,
                cert,
                traces: traces.to_vec(),
                path: seq.to_vec(),
            };
            self.best = Some(Leaf {
                perm: leaf.perm.clone(),
                cert: leaf.cert.clone(),
                traces: leaf.traces.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gamma = compose(&first.perm, &perm);
            let common = first.path.iter().zip(seq).take_while(|(a, b)| a == b).count();
            self.generators.push(gamma);
            return Some(common);
        }
        let best = self.best.as_ref().expect("best set with first");
        let order = cmp_traces(traces, &best.traces).then_with(|| cert.cmp(&best.cert));
        match order {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    perm,
                    cert,
                    traces: traces.to_vec(),
                    path: seq.to_vec(),
                });
            }
            Ordering::Equal => {
                let gamma = compose(&best.perm, &perm);
                self.generators.push(gamma);
            }
            Ordering::Less => {}
        }
        None
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
fn compose(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (a, b) in from.iter().zip(to) {
        gamma[*a] = *b;
    }
    gamma
}
