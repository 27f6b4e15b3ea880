//! Helpers shared by the integration suites.

#![allow(dead_code)]

use kdense_core::search::{enumerate_connected, SearchConstraints};
use kdense_core::Graph;
use proptest::prelude::*;

/// Graphs on `lo..=hi` vertices with edge probability drawn per graph.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.0f64..=1.0).prop_flat_map(|(n, p)| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p.clamp(0.01, 0.99)), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

pub fn connected(n: usize) -> Vec<Graph> {
    enumerate_connected(&SearchConstraints::new(n))
        .unwrap()
        .graphs
        .iter()
        .map(|f| f.graph())
        .collect()
}

pub fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected).collect()
}

/// Multiplicity by explicit neighbour sets.
pub fn naive_multiplicity(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.order())
        .filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
        .count()
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}
