//! Named examples and the recipe registry used by the command line.

use std::collections::BTreeMap;

use super::extremal::{
    clique_chain, complement_construction, disconnected_min_family, glued_cliques, max_edge_construction,
    min_edge_construction, realization,
};
use super::formulas::binom;
use super::{Certificate, ConstructionRecipe, ExtremalWitness};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, complete, cycle, disjoint_union, identify_vertices, octahedron, Graph};

/// `a`-fold cartesian power of `C_4`: 2*-dense and `2a`-connected.
pub fn c4_torus(a: usize) -> Result<ExtremalWitness> {
    if a == 0 {
        return Err(Error::InvalidParameters("torus needs a >= 1".into()));
    }
    let mut g = cycle(4);
    for _ in 1..a {
        g = cartesian_product(&g, &cycle(4));
    }
    let n = 4usize.pow(a as u32);
    let mut cert = Certificate::new(n, n * a, 2, Some(true));
    cert.edge_connectivity = Some(2 * a);
    cert.vertex_connectivity = Some(2 * a);
    ExtremalWitness::certify(ConstructionRecipe::new("torus", &[("a", a)]), cert, g)
}

/// `copies` copies of `K_k` sharing one cut vertex.
pub fn cut_cliques(k: usize, copies: usize) -> Result<ExtremalWitness> {
    if k < 2 || copies < 1 {
        return Err(Error::InvalidParameters(format!(
            "need k >= 2 and copies >= 1, got k={k}, copies={copies}"
        )));
    }
    let kk = complete(k);
    let parts = vec![(&kk, 0); copies];
    let g = identify_vertices(&parts)?.graph;
    let mut cert = Certificate::new(1 + copies * (k - 1), copies * binom(k, 2), k, Some(true));
    cert.vertex_connectivity = Some(if copies > 1 { 1 } else { k - 1 });
    cert.edge_connectivity = Some(k - 1);
    ExtremalWitness::certify(
        ConstructionRecipe::new("cut-cliques", &[("k", k), ("copies", copies)]),
        cert,
        g,
    )
}

/// `q` disjoint copies of `K_k`.
pub fn clique_copies(k: usize, q: usize) -> Result<ExtremalWitness> {
    if k < 2 || q < 1 {
        return Err(Error::InvalidParameters(format!(
            "need k >= 2 and copies >= 1, got k={k}, copies={q}"
        )));
    }
    let g = (0..q).fold(Graph::new(0), |acc, _| disjoint_union(&acc, &complete(k)));
    ExtremalWitness::certify(
        ConstructionRecipe::new("clique-copies", &[("k", k), ("copies", q)]),
        Certificate::new(q * k, q * binom(k, 2), k, Some(q == 1)),
        g,
    )
}

pub fn octahedron_example() -> Result<ExtremalWitness> {
    let mut cert = Certificate::new(6, 12, 4, Some(true));
    cert.omega = Some(3);
    ExtremalWitness::certify(ConstructionRecipe::new("octahedron", &[]), cert, octahedron())
}

/// Tori for `a = 1..=3`, cut-vertex clique pairs for `k = 3..=7`, and the
/// octahedron.
pub fn special_examples() -> Result<Vec<ExtremalWitness>> {
    let mut out = Vec::new();
    for a in 1..=3 {
        out.push(c4_torus(a)?);
    }
    for k in 3..=7 {
        out.push(cut_cliques(k, 2)?);
    }
    out.push(octahedron_example()?);
    Ok(out)
}

pub const RECIPE_NAMES: &[&str] = &[
    "glued-cliques",
    "disconnected-min",
    "clique-chain",
    "min-edge",
    "complement",
    "max-edge",
    "realization",
    "torus",
    "cut-cliques",
    "clique-copies",
    "octahedron",
];

/// Builds a recipe by name. Missing parameters are reported as errors;
/// `copies` defaults to 2.
pub fn build_recipe(name: &str, params: &BTreeMap<String, usize>) -> Result<ExtremalWitness> {
    let get = |key: &str| {
        params
            .get(key)
            .copied()
            .ok_or_else(|| Error::InvalidParameters(format!("recipe {name} needs --{key}")))
    };
    let copies = || params.get("copies").copied().unwrap_or(2);
    match name {
        "glued-cliques" => glued_cliques(get("k")?, get("r")?),
        "disconnected-min" => disconnected_min_family(get("k")?, get("n")?),
        "clique-chain" => clique_chain(get("k")?, get("n")?),
        "min-edge" => min_edge_construction(get("k")?, get("n")?),
        "complement" => complement_construction(get("k")?, get("n")?),
        "max-edge" => max_edge_construction(get("k")?, get("n")?),
        "realization" => realization(get("k")?, get("n")?, get("a")?),
        "torus" => c4_torus(get("a")?),
        "cut-cliques" => cut_cliques(get("k")?, copies()),
        "clique-copies" => clique_copies(get("k")?, copies()),
        "octahedron" => octahedron_example(),
        _ => Err(Error::InvalidParameters(format!(
            "unknown recipe {name:?}; expected one of {}",
            RECIPE_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_verifies() {
        let all = special_examples().unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all[1].certificate.edge_connectivity, Some(4));
        let six = all.iter().find(|w| w.recipe.params.get("k") == Some(&6)).unwrap();
        assert_eq!(six.certificate.vertex_connectivity, Some(1));
    }

    #[test]
    fn registry() {
        let p: BTreeMap<String, usize> = [("k".to_string(), 3), ("n".to_string(), 6)].into();
        assert_eq!(build_recipe("max-edge", &p).unwrap().graph.size(), 12);
        assert!(matches!(
            build_recipe("max-edge", &BTreeMap::new()),
            Err(Error::InvalidParameters(_))
        ));
        assert!(build_recipe("nonsense", &p).is_err());
        for name in RECIPE_NAMES {
            let p: BTreeMap<String, usize> = [("k", 4), ("n", 8), ("r", 1), ("a", 20), ("copies", 2)]
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect();
            let p = if *name == "torus" {
                [("a".to_string(), 2)].into()
            } else {
                p
            };
            build_recipe(name, &p).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn certificate_failure_is_reported() {
        let recipe = ConstructionRecipe::new("bogus", &[]);
        let err = Certificate::new(3, 3, 4, None)
            .verify(&recipe, &complete(3))
            .unwrap_err();
        assert!(matches!(err, Error::Certificate { .. }));
    }
}
