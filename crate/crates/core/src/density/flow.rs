//! Global edge and vertex connectivity via unit-capacity max flow.

use std::collections::VecDeque;

use crate::graph::{is_connected, Graph};

struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Arc `a -> b` with capacity `c` and its residual twin `b -> a` with `back`.
    fn arc(&mut self, a: usize, b: usize, c: u32, back: u32) {
        self.adj[a].push(self.head.len());
        self.head.push(b);
        self.cap.push(c);
        self.adj[b].push(self.head.len());
        self.head.push(a);
        self.cap.push(back);
    }

    /// Max flow from `s` to `t`, stopping early once it reaches `limit`.
    fn max_flow(&self, s: usize, t: usize, limit: usize) -> usize {
        let mut cap = self.cap.clone();
        let mut flow = 0;
        let nodes = self.adj.len();
        while flow < limit {
            let mut via = vec![usize::MAX; nodes];
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if cap[a] > 0 && y != s && via[y] == usize::MAX {
                        via[y] = a;
                        if y == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut y = t;
            while y != s {
                let a = via[y];
                cap[a] -= 1;
                cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Minimum number of edges whose removal disconnects `g`; 0 when `g` is
/// disconnected or has fewer than two vertices.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n < 2 || !is_connected(g) {
        return 0;
    }
    let mut net = Network::new(n);
    for e in g.edges() {
        net.arc(e.u, e.v, 1, 1);
    }
    let mut best = g.min_degree().expect("n >= 2");
    for t in 1..n {
        best = best.min(net.max_flow(0, t, best));
    }
    best
}

/// Minimum number of vertices whose removal disconnects `g` or leaves a
/// single vertex; `n - 1` for `K_n`, 0 when disconnected.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n < 2 || !is_connected(g) {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    // Vertex v splits into 2v (in) and 2v+1 (out) joined by a unit arc.
    let big = n as u32;
    let mut net = Network::new(2 * n);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1, 1, 0);
    }
    for e in g.edges() {
        net.arc(2 * e.u + 1, 2 * e.v, big, 0);
        net.arc(2 * e.v + 1, 2 * e.u, big, 0);
    }
    let mut best = n - 1;
    // Some vertex among the first best+1 lies outside a minimum cut.
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(net.max_flow(2 * i + 1, 2 * j, best));
            }
        }
        i += 1;
    }
    best
}
