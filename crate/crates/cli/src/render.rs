//! Text and DOT renderings. JSON goes through serde directly.

use std::fmt::Write;

use kdense_core::density::{all_multiplicities, k_dense_subgraph, AnalysisReport, PropositionReport};
use kdense_core::Graph;

/// Edges labelled with their multiplicity. With a threshold `k`, edges whose
/// multiplicity is below `k - 2` are red and edges peeled away afterwards
/// (outside `D_k`) are dashed grey.
pub fn dot(g: &Graph, k: Option<usize>) -> String {
    let kept = k.and_then(|k| k_dense_subgraph(g, k).ok());
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        writeln!(s, "  {v};").unwrap();
    }
    for (e, m) in all_multiplicities(g).iter() {
        let style = match (k, &kept) {
            (Some(k), _) if m + 2 < k => ", color=red",
            (Some(_), Some(d)) if d.edges.binary_search(&e).is_err() => ", color=gray, style=dashed",
            _ => "",
        };
        writeln!(s, "  {} -- {} [label={m}{style}];", e.u, e.v).unwrap();
    }
    s.push_str("}\n");
    s
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "undefined".into(), |v| v.to_string())
}

fn sets(communities: &[Vec<usize>]) -> String {
    communities
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn analysis_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    writeln!(s, "n={} m={}", r.n, r.m).unwrap();
    writeln!(s, "degree: min {} max {}", opt(r.degree_min), opt(r.degree_max)).unwrap();
    writeln!(s, "k*: {}", r.k_star).unwrap();
    writeln!(s, "omega: {}  core: {}", r.hierarchy.omega, r.hierarchy.core).unwrap();
    writeln!(s, "min multiplicity: {}", opt(r.multiplicity_min)).unwrap();
    for level in &r.communities_per_k {
        writeln!(s, "k={}: {}", level.k, sets(&level.communities)).unwrap();
    }
    s.push_str(&checks_text(&r.proposition_checks));
    s
}

pub fn communities_text(levels: &[(usize, Vec<Vec<usize>>)]) -> String {
    levels.iter().map(|(k, c)| format!("k={k}: {}\n", sets(c))).collect()
}

fn checks_text(checks: &[kdense_core::density::PropositionCheck]) -> String {
    let mut s = String::new();
    for c in checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        write!(s, "{verdict} {}", c.id).unwrap();
        if let Some(w) = &c.witness {
            write!(s, " ({w})").unwrap();
        }
        if !c.skipped.is_empty() {
            write!(s, " skipped {:?}", c.skipped).unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn propositions_text(r: &PropositionReport) -> String {
    format!("k*: {}\n{}", r.k_star, checks_text(&r.checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use kdense_core::graph::{complete, identify_vertices};

    #[test]
    fn dot_marks_low_multiplicity() {
        let g = identify_vertices(&[(&complete(4), 0), (&complete(3), 0)])
            .unwrap()
            .graph;
        let d = dot(&g, Some(4));
        assert_eq!(d.matches("color=red").count(), 3);
        assert!(d.contains("0 -- 1 [label=2];"));
        assert!(!dot(&g, None).contains("color"));
    }
}
