//! Parameterized k*-dense constructions. Every builder checks its own
//! certificate (order, size, k*, connectivity) with the density engine
//! before returning, and fails with [`Error::Certificate`] otherwise.

mod catalog;
mod extremal;
mod formulas;

pub use catalog::{
    build_recipe, c4_torus, clique_copies, cut_cliques, octahedron_example, special_examples, RECIPE_NAMES,
};
pub use extremal::{
    clique_chain, complement_construction, disconnected_min_family, glued_cliques, max_edge_construction,
    min_edge_construction, realization,
};
pub use formulas::{
    binom, clique_chain_edges, complement_edges, disconnected_min_edges, max_edges, min_edge_formula, FormulaStatus,
    MinEdgeFormula,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::density::{clique_number, density_index, edge_connectivity, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::{is_connected, to_graph6, Edge, Graph, VertexPartition};

/// Recipe name plus its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecipe {
    pub name: String,
    pub params: BTreeMap<String, usize>,
}

impl ConstructionRecipe {
    pub fn new(name: &str, params: &[(&str, usize)]) -> Self {
        ConstructionRecipe {
            name: name.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Predicted invariants. Optional fields are checked only when present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub m: usize,
    pub k_star: usize,
    pub connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_connectivity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_connectivity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
}

impl Certificate {
    pub fn new(n: usize, m: usize, k_star: usize, connected: Option<bool>) -> Self {
        Certificate {
            n,
            m,
            k_star,
            connected,
            edge_connectivity: None,
            vertex_connectivity: None,
            omega: None,
        }
    }

    /// Recomputes every predicted field on `g`.
    pub fn verify(&self, recipe: &ConstructionRecipe, g: &Graph) -> Result<()> {
        let fail = |detail: String| Error::Certificate {
            recipe: recipe.name.clone(),
            detail,
        };
        let mut checks: Vec<(&str, Option<usize>, usize)> =
            vec![("n", Some(self.n), g.order()), ("m", Some(self.m), g.size())];
        let ks = density_index(g);
        if ks.get() != Some(self.k_star) {
            return Err(fail(format!("k* predicted {}, engine found {ks}", self.k_star)));
        }
        if let Some(c) = self.connected {
            if is_connected(g) != c {
                return Err(fail(format!("connected predicted {c}")));
            }
        }
        if self.edge_connectivity.is_some() {
            checks.push(("edge connectivity", self.edge_connectivity, edge_connectivity(g)));
        }
        if self.vertex_connectivity.is_some() {
            checks.push(("vertex connectivity", self.vertex_connectivity, vertex_connectivity(g)));
        }
        if self.omega.is_some() {
            checks.push(("omega", self.omega, clique_number(g)));
        }
        for (what, want, got) in checks {
            if want != Some(got) {
                return Err(fail(format!("{what} predicted {}, found {got}", want.unwrap_or(0))));
            }
        }
        Ok(())
    }
}

/// A built graph with its verified certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalWitness {
    pub recipe: ConstructionRecipe,
    pub certificate: Certificate,
    #[serde(serialize_with = "ser_g6", deserialize_with = "de_g6", rename = "graph6")]
    pub graph: Graph,
    /// Named vertex blocks (hub, A/B/C parts, ...), when the recipe has them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<VertexPartition>,
    /// The edge whose common neighbourhood pins k*, when the recipe has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edge: Option<Edge>,
}

impl ExtremalWitness {
    pub(crate) fn certify(recipe: ConstructionRecipe, certificate: Certificate, graph: Graph) -> Result<Self> {
        certificate.verify(&recipe, &graph)?;
        Ok(ExtremalWitness {
            recipe,
            certificate,
            graph,
            partition: None,
            witness_edge: None,
        })
    }
}

fn ser_g6<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_graph6(g))
}

fn de_g6<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
    let text = String::deserialize(d)?;
    crate::graph::from_graph6(&text).map_err(serde::de::Error::custom)
}
