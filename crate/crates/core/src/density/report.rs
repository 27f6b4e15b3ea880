use serde::{Deserialize, Serialize};

use super::{
    all_multiplicities, check_propositions, dense_hierarchy, hierarchy_report, DensityIndex, HierarchyReport,
    PropositionCheck,
};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommunityLevel {
    pub k: usize,
    pub communities: Vec<Vec<usize>>,
}

/// Full density analysis of one graph, serialized as the `analyze` report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub degree_min: Option<usize>,
    pub degree_max: Option<usize>,
    pub k_star: DensityIndex,
    pub multiplicity_min: Option<usize>,
    pub multiplicity_histogram: Vec<usize>,
    /// Nonempty levels of the dense hierarchy, ascending in k.
    pub communities_per_k: Vec<CommunityLevel>,
    pub hierarchy: HierarchyReport,
    pub proposition_checks: Vec<PropositionCheck>,
}

pub fn analyze(g: &Graph) -> AnalysisReport {
    let mult = all_multiplicities(g);
    let communities_per_k = dense_hierarchy(g)
        .levels
        .iter()
        .filter(|l| !l.is_empty())
        .map(|l| CommunityLevel {
            k: l.k,
            communities: l.communities(),
        })
        .collect();
    AnalysisReport {
        n: g.order(),
        m: g.size(),
        degree_min: g.min_degree(),
        degree_max: g.max_degree(),
        k_star: super::density_index(g),
        multiplicity_min: mult.min(),
        multiplicity_histogram: mult.histogram(),
        communities_per_k,
        hierarchy: hierarchy_report(g),
        proposition_checks: check_propositions(g).checks,
    }
}
