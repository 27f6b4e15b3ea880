use super::Graph;

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// `false` for the null graph, `true` for `K_1`.
pub fn is_connected(g: &Graph) -> bool {
    g.order() > 0 && reach_count(g, 0, None) == g.order()
}

fn reach_count(g: &Graph, start: usize, removed: Option<usize>) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    count
}

/// Articulation points of a connected graph, ascending. For disconnected
/// input a vertex counts as a cut vertex if removing it increases the
/// number of components.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return Vec::new();
    }
    // Iterative Hopcroft-Tarjan low-link.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(root, usize::MAX, g.neighbors(root).collect())];
        while let Some((v, parent, pending)) = stack.last_mut() {
            let v = *v;
            let parent = *parent;
            if let Some(u) = pending.pop() {
                if disc[u] == usize::MAX {
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, v, g.neighbors(u).collect()));
                } else if u != parent {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some((p, _, _)) = stack.last() {
                    let p = *p;
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}
