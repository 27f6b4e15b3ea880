//! Structural checks that every k*-dense graph must satisfy, each reported
//! with a witness on failure.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{density_index, is_k_dense, k_dense_subgraph, DensityIndex};
use crate::graph::{delete_vertex, is_connected, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionCheck {
    pub id: String,
    pub pass: bool,
    /// Counterexample or notable value; `None` when nothing to report.
    pub witness: Option<String>,
    /// Vertices (or k values) the check could not be applied to.
    pub skipped: Vec<usize>,
}

impl PropositionCheck {
    fn new(id: &str, pass: bool, witness: Option<String>, skipped: Vec<usize>) -> Self {
        PropositionCheck {
            id: id.into(),
            pass,
            witness,
            skipped,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionReport {
    pub k_star: DensityIndex,
    pub checks: Vec<PropositionCheck>,
}

impl PropositionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&PropositionCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Runs the five checks:
///
/// - `triangle_support`: peeling fixes `g` exactly when every edge lies in
///   `k - 2` triangles and no vertex is isolated, for every k in `2..=n`.
/// - `min_degree_clique`: `δ >= k* - 1`, and every vertex of degree
///   `k* - 1` has a clique as closed neighbourhood.
/// - `vertex_deletion`: `g - v` has k* at least `k* - 1`; vertices whose
///   removal leaves an isolated vertex are skipped.
/// - `degree_sufficiency`: `δ >= ceil((n + k) / 2) - 1` implies k-dense.
/// - `edge_connectivity`: connected graphs are `(k* - 1)`-edge-connected.
pub fn check_propositions(g: &Graph) -> PropositionReport {
    let n = g.order();
    let ks = density_index(g);
    let delta = g.min_degree().unwrap_or(0);
    let mut checks = Vec::new();

    let mut bad = None;
    for k in 2..=n.max(2) {
        let peeled = k_dense_subgraph(g, k).expect("k >= 2").covers(g) && n > 0;
        let direct =
            n > 0 && (0..n).all(|v| g.degree(v) > 0) && g.edges().all(|e| g.common_neighbor_count(e.u, e.v) + 2 >= k);
        if peeled != direct {
            bad = Some(format!("k={k}: peeling says {peeled}, triangle count says {direct}"));
            break;
        }
    }
    checks.push(PropositionCheck::new("triangle_support", bad.is_none(), bad, vec![]));

    let Some(k) = ks.get() else {
        for id in [
            "min_degree_clique",
            "vertex_deletion",
            "degree_sufficiency",
            "edge_connectivity",
        ] {
            let note = Some("density index undefined".to_string());
            checks.push(PropositionCheck::new(id, true, note, vec![]));
        }
        return PropositionReport { k_star: ks, checks };
    };

    let mut witness = None;
    if delta + 1 < k {
        witness = Some(format!("min degree {delta} < {}", k - 1));
    } else if let Some(v) = (0..n)
        .filter(|&v| g.degree(v) == k - 1)
        .find(|&v| !closed_neighbourhood_is_clique(g, v))
    {
        witness = Some(format!("vertex {v} has degree {} but N[{v}] is not a clique", k - 1));
    }
    checks.push(PropositionCheck::new(
        "min_degree_clique",
        witness.is_none(),
        witness,
        vec![],
    ));

    let mut skipped = Vec::new();
    let mut witness = None;
    for v in 0..n {
        let h = delete_vertex(g, v).expect("v < n").graph;
        let hk = density_index(&h);
        match hk.get() {
            None => skipped.push(v),
            Some(hk) if hk + 1 < k && witness.is_none() => {
                witness = Some(format!("g - {v} has k* = {hk} < {}", k - 1));
            }
            Some(_) => {}
        }
    }
    checks.push(PropositionCheck::new(
        "vertex_deletion",
        witness.is_none(),
        witness,
        skipped,
    ));

    let mut witness = None;
    for kk in 2..=n {
        if delta + 1 >= (n + kk).div_ceil(2) && !is_k_dense(g, kk).expect("k >= 2") {
            witness = Some(format!("min degree {delta} but not {kk}-dense"));
            break;
        }
    }
    checks.push(PropositionCheck::new(
        "degree_sufficiency",
        witness.is_none(),
        witness,
        vec![],
    ));

    if is_connected(g) {
        let lambda = super::edge_connectivity(g);
        let pass = lambda + 1 >= k;
        checks.push(PropositionCheck::new(
            "edge_connectivity",
            pass,
            Some(format!("edge connectivity {lambda}")),
            vec![],
        ));
    } else {
        checks.push(PropositionCheck::new(
            "edge_connectivity",
            true,
            Some("disconnected".into()),
            vec![],
        ));
    }

    PropositionReport { k_star: ks, checks }
}

fn closed_neighbourhood_is_clique(g: &Graph, v: usize) -> bool {
    let nb: Vec<usize> = g.neighbors(v).collect();
    nb.iter()
        .enumerate()
        .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    /// Some edge has no common neighbour.
    TwoStarDense,
    /// `K_n - e` with `n >= 3`.
    CompleteMinusEdge,
    /// `K_n` with `n >= 2`.
    Complete,
    HasIsolatedVertex,
    NotDense,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub labels: BTreeSet<ClassLabel>,
    pub k_star: DensityIndex,
    /// The structural labels agree with the density index, and any other
    /// graph on `n >= 3` vertices has `2 <= k* <= n - 2`.
    pub consistent: bool,
}

pub fn classify_special(g: &Graph) -> Classification {
    let n = g.order();
    let ks = density_index(g);
    let mut labels = BTreeSet::new();
    let isolated = (0..n).any(|v| g.degree(v) == 0);
    if isolated {
        labels.insert(ClassLabel::HasIsolatedVertex);
    }
    if isolated || n == 0 {
        labels.insert(ClassLabel::NotDense);
    }
    if !isolated && g.edges().any(|e| g.common_neighbor_count(e.u, e.v) == 0) {
        labels.insert(ClassLabel::TwoStarDense);
    }
    if n >= 2 && g.is_complete() {
        labels.insert(ClassLabel::Complete);
    }
    if n >= 3 && g.size() + 1 == n * (n - 1) / 2 {
        labels.insert(ClassLabel::CompleteMinusEdge);
    }

    let consistent = match ks.get() {
        None => labels.contains(&ClassLabel::NotDense),
        Some(k) => {
            !labels.contains(&ClassLabel::NotDense)
                && labels.contains(&ClassLabel::TwoStarDense) == (k == 2)
                && labels.contains(&ClassLabel::Complete) == (k == n)
                && labels.contains(&ClassLabel::CompleteMinusEdge) == (n >= 3 && k == n - 1)
                && (n < 3
                    || labels.contains(&ClassLabel::Complete)
                    || labels.contains(&ClassLabel::CompleteMinusEdge)
                    || (2..=n - 2).contains(&k))
        }
    };
    Classification {
        labels,
        k_star: ks,
        consistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, complete, cycle, delete_edge, identify_vertices, star};

    #[test]
    fn two_k5_at_a_vertex_passes() {
        let k5 = complete(5);
        let g = identify_vertices(&[(&k5, 0), (&k5, 0)]).unwrap().graph;
        let r = check_propositions(&g);
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.k_star.get(), Some(5));
        assert_eq!(
            r.get("edge_connectivity").unwrap().witness.as_deref(),
            Some("edge connectivity 4")
        );
    }

    #[test]
    fn complete_graphs_pass() {
        for n in 1..8 {
            assert!(check_propositions(&complete(n)).all_pass());
        }
    }

    #[test]
    fn torus_is_two_star_dense_but_highly_connected() {
        let t = cartesian_product(&cycle(4), &cycle(4));
        let r = check_propositions(&t);
        assert!(r.all_pass());
        assert_eq!(r.k_star.get(), Some(2));
        assert_eq!(
            r.get("edge_connectivity").unwrap().witness.as_deref(),
            Some("edge connectivity 4")
        );
    }

    #[test]
    fn star_deletion_is_skipped() {
        let r = check_propositions(&star(3));
        assert_eq!(r.get("vertex_deletion").unwrap().skipped, vec![0]);
    }

    #[test]
    fn special_labels() {
        let c = classify_special(&star(4));
        assert!(c.labels.contains(&ClassLabel::TwoStarDense) && c.consistent);
        let c = classify_special(&delete_edge(&complete(6), 2, 3).unwrap());
        assert_eq!(c.labels, BTreeSet::from([ClassLabel::CompleteMinusEdge]));
        assert!(c.consistent);
        let c = classify_special(&complete(6));
        assert_eq!(c.labels, BTreeSet::from([ClassLabel::Complete]));
        let c = classify_special(&Graph::new(2));
        assert!(c.labels.contains(&ClassLabel::HasIsolatedVertex) && c.consistent);
        assert!(classify_special(&Graph::new(0)).consistent);
    }
}
