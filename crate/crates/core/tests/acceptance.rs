//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p kdense-core --test acceptance -- --nocapture`.
//!
//! Exits non-zero on any failure except a realization miss at an edge count
//! that exhaustive search shows no connected k*-dense graph attains.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use kdense_core::constructions::{
    clique_chain, complement_construction, max_edge_construction, max_edges, min_edge_formula, realization,
};
use kdense_core::density::{
    brute_force_k_dense, check_propositions, density_index, k_core, k_dense_communities, k_dense_subgraph,
    maximal_cliques,
};
use kdense_core::graph::{canonical_form, complete, delete_edge};
use kdense_core::search::{
    bound_comparison, conjecture_check, enumerate_connected, realization_scan, search_max_edges, search_min_edges,
    ConjectureRow, SearchConstraints, SweepOptions, Verdict,
};
use kdense_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn connected(n: usize) -> Vec<Graph> {
    enumerate_connected(&SearchConstraints::new(n))
        .expect("within guard")
        .graphs
        .iter()
        .map(|f| f.graph())
        .collect()
}

fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn classification() -> Outcome {
    let mut checked = 0;
    for n in 4..=7 {
        let kn = canonical_form(&complete(n));
        let kne = canonical_form(&delete_edge(&complete(n), 0, 1).unwrap());
        for g in connected(n) {
            let f = canonical_form(&g);
            let k = density_index(&g).get();
            ensure((k == Some(n)) == (f == kn), || {
                format!("n={n}: k*=n mismatch on {}", f.to_graph6())
            })?;
            ensure((k == Some(n - 1)) == (f == kne), || {
                format!("n={n}: k*=n-1 mismatch on {}", f.to_graph6())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} connected graphs on 4..=7 vertices"))
}

fn minimum_edges() -> Outcome {
    let mut rows = 0;
    for k in 2..=4 {
        for n in k..=9 {
            let rec = search_min_edges(k, n, SweepOptions::default()).map_err(|e| e.to_string())?;
            let want = min_edge_formula(k, n).unwrap().value;
            ensure(rec.is_complete() && rec.value == Some(want), || {
                format!("e({k},{n}): search {:?}, closed form {want}", rec.value)
            })?;
            rows += 1;
        }
    }
    Ok(format!("{rows} (k, n) pairs, n up to 9"))
}

fn maximum_edges() -> Outcome {
    let mut rows = 0;
    for n in 2..=7 {
        for k in 2..=n {
            let rec = search_max_edges(k, n, SweepOptions::default()).map_err(|e| e.to_string())?;
            let want = max_edges(k, n).unwrap();
            ensure(rec.is_complete() && rec.value == Some(want), || {
                format!("E({k},{n}): search {:?}, closed form {want}", rec.value)
            })?;
            rows += 1;
        }
    }
    for n in 2..=12 {
        for k in 2..=n {
            let w = max_edge_construction(k, n).map_err(|e| e.to_string())?;
            ensure(w.graph.size() == max_edges(k, n).unwrap(), || {
                format!("construction E({k},{n})")
            })?;
        }
    }
    Ok(format!("{rows} exhaustive pairs, constructions for n <= 12"))
}

/// Fails on any interval count with no realizing graph. Such misses are
/// reported through `infeasible` so `main` can tell them from builder bugs.
fn realization_completeness() -> Outcome {
    let mut bugs = Vec::new();
    let mut infeasible = Vec::new();
    let mut rows = 0;
    for k in 2..=4 {
        for n in k.max(4)..=8 {
            let lo = min_edge_formula(k, n).unwrap().value;
            let hi = max_edges(k, n).unwrap();
            let scan = realization_scan(k, n, SweepOptions::default()).map_err(|e| e.to_string())?;
            if !scan.is_complete() || scan.values.iter().any(|a| !(lo..=hi).contains(a)) {
                bugs.push(format!("scan({k},{n}) = {:?} leaves [{lo}, {hi}]", scan.values));
            }
            for a in lo..=hi {
                let feasible = scan.values.contains(&a);
                match realization(k, n, a) {
                    Ok(w) if w.graph.size() == a && feasible => {}
                    Ok(_) if feasible => bugs.push(format!("realization({k},{n},{a}) wrong size")),
                    Ok(_) => bugs.push(format!("realization({k},{n},{a}) built a graph the scan missed")),
                    Err(e) if feasible => bugs.push(format!("realization({k},{n},{a}): {e}")),
                    Err(_) => infeasible.push(format!("({k},{n},{a})")),
                }
            }
            rows += 1;
        }
    }
    if !bugs.is_empty() {
        return Err(bugs.join("; "));
    }
    if !infeasible.is_empty() {
        return Err(format!(
            "{INFEASIBLE_TAG} {}: exhaustive scan finds no connected k*-dense graph, builder agrees",
            infeasible.join(" ")
        ));
    }
    Ok(format!("{rows} (k, n) pairs"))
}

const INFEASIBLE_TAG: &str = "no realizing graph for (k,n,a) =";

fn crossover() -> Outcome {
    let rows = bound_comparison([(23, 26), (24, 26)]).map_err(|e| e.to_string())?;
    ensure(rows[0].clique_chain == 316 && rows[0].complement == Some(311), || {
        format!("{:?}", rows[0])
    })?;
    ensure(rows[1].clique_chain == 321 && rows[1].complement == Some(312), || {
        format!("{:?}", rows[1])
    })?;
    for (k, n) in [(23, 26), (24, 26)] {
        clique_chain(k, n).map_err(|e| e.to_string())?;
        complement_construction(k, n).map_err(|e| e.to_string())?;
    }
    Ok("(316, 311) and (321, 312), all four graphs certified".into())
}

fn oracle_equivalence() -> Outcome {
    let mut cases = 0;
    for g in connected_up_to(7) {
        for k in 2..=g.order() {
            let peeled = k_dense_subgraph(&g, k).unwrap();
            let oracle = brute_force_k_dense(&g, k).unwrap();
            ensure(
                peeled.vertices == oracle.union_vertices && peeled.edges == oracle.union_edges,
                || format!("k={k} on {}", kdense_core::graph::to_graph6(&g)),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (graph, k) cases"))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.95);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn proposition_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b64);
    let mut graphs = connected_up_to(7);
    let exhaustive = graphs.len();
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        graphs.push(random_graph(&mut rng, n));
    }
    let mut skips = 0;
    for g in &graphs {
        let r = check_propositions(g);
        if let Some(c) = r.checks.iter().find(|c| !c.pass) {
            return Err(format!(
                "{} fails on {}: {:?}",
                c.id,
                kdense_core::graph::to_graph6(g),
                c.witness
            ));
        }
        skips += r.get("vertex_deletion").map_or(0, |c| c.skipped.len());
    }
    Ok(format!(
        "{exhaustive} exhaustive + 500 random graphs, {skips} deletion skips recorded"
    ))
}

fn hierarchy_containment() -> Outcome {
    let mut cases = 0;
    for g in connected_up_to(7) {
        let cliques = maximal_cliques(&g);
        for k in 2..=g.order() {
            let comms = k_dense_communities(&g, k).unwrap();
            let core: BTreeSet<usize> = k_core(&g, k).into_iter().collect();
            for c in cliques.iter().filter(|c| c.len() >= k) {
                ensure(comms.iter().any(|m| c.iter().all(|v| m.contains(v))), || {
                    format!(
                        "clique {c:?} outside every {k}-dense community of {}",
                        kdense_core::graph::to_graph6(&g)
                    )
                })?;
            }
            for m in &comms {
                ensure(m.iter().all(|v| core.contains(v)), || {
                    format!(
                        "community {m:?} outside the {k}-core of {}",
                        kdense_core::graph::to_graph6(&g)
                    )
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (graph, k) cases"))
}

fn artifact_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../artifacts")
        .join(name)
}

fn conjecture_report() -> Outcome {
    let mut rows: Vec<ConjectureRow> = Vec::new();
    for k in 5..=7 {
        rows.extend(conjecture_check(k, k..=9, SweepOptions::default()).map_err(|e| e.to_string())?);
    }
    if let Some(r) = rows.iter().find(|r| r.verdict == Verdict::Inconclusive) {
        return Err(format!("inconclusive row k={} n={}", r.k, r.n));
    }
    let path = artifact_path("conjecture_report.json");
    let shipped = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let shipped: serde_json::Value = serde_json::from_str(&shipped).map_err(|e| e.to_string())?;
    let rows_json = serde_json::to_value(&rows).unwrap();
    let shipped_rows: Vec<serde_json::Value> = shipped["rows"]
        .as_array()
        .ok_or("shipped report has no rows")?
        .iter()
        .filter(|r| r["k"].as_u64().is_some_and(|k| k <= 7))
        .cloned()
        .collect();
    ensure(rows_json.as_array().unwrap() == &shipped_rows, || {
        "shipped report differs from a fresh run".into()
    })?;
    let mismatches = rows.iter().filter(|r| r.verdict == Verdict::Mismatch).count();
    Ok(format!(
        "{} rows, {mismatches} mismatches, all definitive; shipped report current",
        rows.len()
    ))
}

fn enumerator_self_test() -> Outcome {
    let want = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &w) in want.iter().enumerate() {
        let got = connected(i + 1).len();
        ensure(got == w, || format!("n={}: {got} classes, expected {w}", i + 1))?;
    }
    let render = |threads: usize| {
        let mut c = SearchConstraints::new(8);
        c.threads = Some(threads);
        enumerate_connected(&c)
            .unwrap()
            .graphs
            .iter()
            .map(|f| f.to_graph6() + "\n")
            .collect::<String>()
    };
    let one = render(1);
    ensure(render(2) == one && render(8) == one, || {
        "output differs across worker counts".into()
    })?;
    Ok(format!(
        "counts 1..=8 match; {} bytes identical under 1, 2, 8 workers",
        one.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("classification exactness", classification),
        ("minimum edge counts for k <= 4", minimum_edges),
        ("maximum edge counts", maximum_edges),
        ("realization completeness", realization_completeness),
        ("upper-bound crossover", crossover),
        ("peeling equals subset oracle", oracle_equivalence),
        ("structural property suite", proposition_suite),
        ("clique / dense / core containment", hierarchy_containment),
        ("conjecture report", conjecture_report),
        ("enumerator self-test", enumerator_self_test),
    ];
    let mut failed = 0;
    let mut blocking = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                // A count no graph attains cannot be built; only other failures block.
                if !detail.starts_with(INFEASIBLE_TAG) {
                    blocking += 1;
                }
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if blocking > 0 {
        std::process::exit(1);
    }
}
